#pragma once

// Shared test-only machinery: random instance generators and independent
// oracles (basis enumeration for LPs, vertex brute force for polytopes).
// Nothing here may call back into the code paths under test.

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <vector>

#include "phc/lp.hpp"
#include "phc/measure.hpp"

namespace phc::testing {

inline DiscreteMeasure random_measure(std::mt19937_64& rng, std::size_t dim,
                                      std::size_t max_atoms,
                                      double coord_range = 2.0,
                                      double max_weight = 2.0) {
  std::uniform_int_distribution<std::size_t> natoms(1, max_atoms);
  std::uniform_real_distribution<double> coord(-coord_range, coord_range);
  std::uniform_real_distribution<double> weight(0.0, max_weight);
  DiscreteMeasure m;
  m.dim = dim;
  const std::size_t n = natoms(rng);
  for (std::size_t i = 0; i < n; ++i) {
    Point x(dim);
    for (double& v : x) v = coord(rng);
    m.atoms.push_back({std::move(x), weight(rng)});
  }
  return m;
}

inline DiscreteMeasure normalized(DiscreteMeasure m) {
  double s = mass(m);
  if (s > 0)
    for (auto& a : m.atoms) a.w /= s;
  return m;
}

// Gauss elimination solve of a square system; nullopt when singular.
inline std::optional<Vec> solve_square(Mat A, Vec b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(A[r][col]) > std::abs(A[piv][col])) piv = r;
    if (std::abs(A[piv][col]) < 1e-10) return std::nullopt;
    std::swap(A[piv], A[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      double f = A[r][col] / A[col][col];
      for (std::size_t c2 = col; c2 < n; ++c2) A[r][c2] -= f * A[col][c2];
      b[r] -= f * b[col];
    }
  }
  Vec x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / A[i][i];
  return x;
}

struct BasisEnumeration {
  bool any_feasible = false;
  double best_value = std::numeric_limits<double>::infinity();
};

// Brute-force oracle: the optimum of min <c,z> s.t. Az=b, z>=0 over all
// basic feasible solutions (all size-m column subsets).
inline BasisEnumeration enumerate_bases(const Mat& A, const Vec& b, const Vec& c) {
  const std::size_t m = A.size(), n = c.size();
  BasisEnumeration out;
  std::vector<std::size_t> idx(n);
  for (std::size_t j = 0; j < n; ++j) idx[j] = j;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(std::min(m, n)), true);
  if (m > n) return out;
  std::vector<std::size_t> cols;
  // Iterate over all combinations via prev_permutation on the mask.
  std::vector<bool> mask(n, false);
  std::fill(mask.begin(), mask.begin() + static_cast<long>(m), true);
  do {
    cols.clear();
    for (std::size_t j = 0; j < n; ++j)
      if (mask[j]) cols.push_back(j);
    Mat B(m, Vec(m));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t k = 0; k < m; ++k) B[i][k] = A[i][cols[k]];
    auto x = solve_square(B, b);
    if (!x) continue;
    bool feas = true;
    for (double v : *x)
      if (v < -1e-9) {
        feas = false;
        break;
      }
    if (!feas) continue;
    out.any_feasible = true;
    double val = 0;
    for (std::size_t k = 0; k < m; ++k) val += c[cols[k]] * (*x)[k];
    out.best_value = std::min(out.best_value, val);
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return out;
}

// Andrew monotone-chain convex hull in 2-D, counterclockwise.
inline std::vector<Point> convex_hull_2d(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  auto cross = [](const Point& o, const Point& a, const Point& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
  };
  std::vector<Point> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

}  // namespace phc::testing
