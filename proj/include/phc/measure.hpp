#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace phc {

using Point = std::vector<double>;

// Default absolute tolerance for weight comparisons and merge clustering.
inline constexpr double kDefaultTol = 1e-9;

enum class Norm { L1, L2 };

inline double dot(const Point& a, const Point& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double norm_of(const Point& x, Norm n) {
  double s = 0;
  if (n == Norm::L1) {
    for (double v : x) s += std::abs(v);
    return s;
  }
  for (double v : x) s += v * v;
  return std::sqrt(s);
}

inline double l2norm(const Point& x) { return norm_of(x, Norm::L2); }

inline double dist(const Point& a, const Point& b, Norm n = Norm::L2) {
  Point d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
  return norm_of(d, n);
}

struct Atom {
  Point x;
  double w = 0;
};

// Finitely supported positive measure on R^d.
struct DiscreteMeasure {
  std::size_t dim = 1;
  std::vector<Atom> atoms;

  bool empty() const { return atoms.empty(); }
};

double mass(const DiscreteMeasure& m);

// ba(m) = sum of weight * location; zero vector for the empty measure.
Point first_moment(const DiscreteMeasure& m);

// Canonical form: drops weights <= tol, greedily clusters locations within
// tol of each other (lexicographic scan order; cluster location is the
// weight-weighted barycenter).
DiscreteMeasure normalize_merge(const DiscreteMeasure& m, double tol = kDefaultTol);

// Pushes each atom (x, w) with |x| above the zero threshold to (x/|x|, w|x|)
// on the unit sphere; atoms at the origin are dropped.
DiscreteMeasure homogeneous_marginal(const DiscreteMeasure& m, double tol = kDefaultTol);

// True iff the homogeneous marginals agree atomwise after canonical merge.
bool ph_equivalent(const DiscreteMeasure& a, const DiscreteMeasure& b,
                   double tol = kDefaultTol);

// Atomwise approximate equality of canonical forms (helper shared by
// ph_equivalent and kernel verification).
bool measure_approx_equal(const DiscreteMeasure& a, const DiscreteMeasure& b,
                          double tol);

// Conditional barycenters over a grid of half-open cubes of side <= 1/n
// covering the bounding cube [-a, a]^d.
DiscreteMeasure coarsen(const DiscreteMeasure& m, int n);

// Wasserstein-1 distance via the transport LP; requires equal positive mass.
double w1(const DiscreteMeasure& a, const DiscreteMeasure& b, Norm norm,
          double tol = kDefaultTol);

// Embedding x -> (x, 1) into R^{d+1}.
DiscreteMeasure lift(const DiscreteMeasure& m);

// Drops the last coordinate, then canonical merge. Requires dim >= 2.
DiscreteMeasure project(const DiscreteMeasure& m);

// (x, w) -> ((x_1/x_d, ..., x_{d-1}/x_d, 1), w * x_d). Every atom must have
// last coordinate > tol.
DiscreteMeasure flatten_to_hyperplane(const DiscreteMeasure& m, double tol = kDefaultTol);

}  // namespace phc
