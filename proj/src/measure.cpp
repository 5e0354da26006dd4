#include "phc/measure.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "phc/lp.hpp"

namespace phc {

double mass(const DiscreteMeasure& m) {
  double s = 0;
  for (const auto& a : m.atoms) s += a.w;
  return s;
}

Point first_moment(const DiscreteMeasure& m) {
  Point r(m.dim, 0.0);
  for (const auto& a : m.atoms)
    for (std::size_t c = 0; c < m.dim; ++c) r[c] += a.w * a.x[c];
  return r;
}

DiscreteMeasure normalize_merge(const DiscreteMeasure& m, double tol) {
  std::vector<Atom> kept;
  for (const auto& a : m.atoms)
    if (a.w > tol) kept.push_back(a);
  std::stable_sort(kept.begin(), kept.end(),
                   [](const Atom& a, const Atom& b) { return a.x < b.x; });

  // Greedy clustering: each atom joins the first cluster whose barycenter is
  // within tol, else starts its own.
  struct Cluster {
    Point sum;  // weight-weighted coordinate sum
    double w = 0;
    Point bary() const {
      Point p(sum);
      for (double& v : p) v /= w;
      return p;
    }
  };
  std::vector<Cluster> clusters;
  for (const auto& a : kept) {
    bool merged = false;
    for (auto& cl : clusters) {
      if (dist(cl.bary(), a.x, Norm::L2) <= tol) {
        for (std::size_t c = 0; c < m.dim; ++c) cl.sum[c] += a.w * a.x[c];
        cl.w += a.w;
        merged = true;
        break;
      }
    }
    if (!merged) {
      Cluster cl;
      cl.sum.resize(m.dim);
      for (std::size_t c = 0; c < m.dim; ++c) cl.sum[c] = a.w * a.x[c];
      cl.w = a.w;
      clusters.push_back(std::move(cl));
    }
  }

  DiscreteMeasure out;
  out.dim = m.dim;
  for (const auto& cl : clusters) out.atoms.push_back({cl.bary(), cl.w});
  std::stable_sort(out.atoms.begin(), out.atoms.end(),
                   [](const Atom& a, const Atom& b) { return a.x < b.x; });
  return out;
}

DiscreteMeasure homogeneous_marginal(const DiscreteMeasure& m, double tol) {
  double scale = 0;
  for (const auto& a : m.atoms) scale = std::max(scale, l2norm(a.x));
  const double zero_thresh = tol * (1 + scale);

  DiscreteMeasure out;
  out.dim = m.dim;
  for (const auto& a : m.atoms) {
    const double r = l2norm(a.x);
    if (r <= zero_thresh || a.w <= 0) continue;
    Point u(a.x);
    for (double& v : u) v /= r;
    out.atoms.push_back({std::move(u), a.w * r});
  }
  return normalize_merge(out, tol);
}

bool measure_approx_equal(const DiscreteMeasure& a, const DiscreteMeasure& b,
                          double tol) {
  if (a.dim != b.dim) return false;
  if (a.atoms.size() != b.atoms.size()) return false;
  std::vector<bool> used(b.atoms.size(), false);
  for (const auto& atom : a.atoms) {
    bool found = false;
    for (std::size_t j = 0; j < b.atoms.size(); ++j) {
      if (used[j]) continue;
      const auto& other = b.atoms[j];
      if (dist(atom.x, other.x, Norm::L2) <= tol * (1 + l2norm(atom.x)) &&
          std::abs(atom.w - other.w) <= tol * (1 + std::abs(atom.w))) {
        used[j] = true;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

bool ph_equivalent(const DiscreteMeasure& a, const DiscreteMeasure& b, double tol) {
  if (a.dim != b.dim)
    throw std::invalid_argument("ph_equivalent: dimension mismatch");
  return measure_approx_equal(homogeneous_marginal(a, tol),
                              homogeneous_marginal(b, tol), tol);
}

DiscreteMeasure coarsen(const DiscreteMeasure& m, int n) {
  if (m.atoms.empty()) throw std::invalid_argument("coarsen: empty measure");
  if (n < 1) throw std::invalid_argument("coarsen: n must be positive");

  double a = 0;
  for (const auto& atom : m.atoms)
    for (double v : atom.x) a = std::max(a, std::abs(v));

  // Half-open cells of side exactly 1/n anchored at -a; an atom exactly at +a
  // falls in the top cell index floor(2an), which only collides with interior
  // atoms when they are within 1/n of the boundary.

  struct Bin {
    Point sum;
    double w = 0;
  };
  std::map<std::vector<long>, Bin> bins;
  for (const auto& atom : m.atoms) {
    std::vector<long> key(m.dim);
    for (std::size_t c = 0; c < m.dim; ++c)
      key[c] = static_cast<long>(std::floor((atom.x[c] + a) * n));
    auto& bin = bins[key];
    if (bin.sum.empty()) bin.sum.assign(m.dim, 0.0);
    for (std::size_t c = 0; c < m.dim; ++c) bin.sum[c] += atom.w * atom.x[c];
    bin.w += atom.w;
  }

  DiscreteMeasure out;
  out.dim = m.dim;
  for (const auto& [key, bin] : bins) {
    if (bin.w <= 0) continue;
    Point x(bin.sum);
    for (double& v : x) v /= bin.w;
    out.atoms.push_back({std::move(x), bin.w});
  }
  return out;
}

double w1(const DiscreteMeasure& a, const DiscreteMeasure& b, Norm norm,
          double tol) {
  if (a.dim != b.dim) throw std::invalid_argument("w1: dimension mismatch");
  const double ma = mass(a), mb = mass(b);
  if (std::abs(ma - mb) > tol * (1 + std::max(ma, mb)))
    throw std::invalid_argument("w1: mass mismatch");
  if (ma <= tol) throw std::invalid_argument("w1: zero-mass measure");

  const std::size_t M = a.atoms.size(), N = b.atoms.size();
  // Transport plan variables pi_ij, row sums = a_i/ma, column sums = b_j/mb.
  Mat A(M + N, Vec(M * N, 0.0));
  Vec rhs(M + N, 0.0), cost(M * N, 0.0);
  for (std::size_t i = 0; i < M; ++i) {
    rhs[i] = a.atoms[i].w / ma;
    for (std::size_t j = 0; j < N; ++j) A[i][i * N + j] = 1.0;
  }
  for (std::size_t j = 0; j < N; ++j) {
    rhs[M + j] = b.atoms[j].w / mb;
    for (std::size_t i = 0; i < M; ++i) A[M + j][i * N + j] = 1.0;
  }
  for (std::size_t i = 0; i < M; ++i)
    for (std::size_t j = 0; j < N; ++j)
      cost[i * N + j] = dist(a.atoms[i].x, b.atoms[j].x, norm);

  LPOutcome res = solve(A, rhs, cost);
  if (res.status != LPStatus::Optimal)
    throw NumericalBreakdown("w1: transport LP did not solve to optimality");
  return std::max(0.0, res.value) * ma;
}

DiscreteMeasure lift(const DiscreteMeasure& m) {
  DiscreteMeasure out;
  out.dim = m.dim + 1;
  for (const auto& a : m.atoms) {
    Point x(a.x);
    x.push_back(1.0);
    out.atoms.push_back({std::move(x), a.w});
  }
  return out;
}

DiscreteMeasure project(const DiscreteMeasure& m) {
  if (m.dim < 2) throw std::invalid_argument("project: dimension must be >= 2");
  DiscreteMeasure out;
  out.dim = m.dim - 1;
  for (const auto& a : m.atoms) {
    Point x(a.x.begin(), a.x.end() - 1);
    out.atoms.push_back({std::move(x), a.w});
  }
  return normalize_merge(out, kDefaultTol);
}

DiscreteMeasure flatten_to_hyperplane(const DiscreteMeasure& m, double tol) {
  DiscreteMeasure out;
  out.dim = m.dim;
  for (const auto& a : m.atoms) {
    const double last = a.x[m.dim - 1];
    if (last <= tol)
      throw std::invalid_argument(
          "flatten_to_hyperplane: atom not strictly inside the open half space");
    Point x(m.dim);
    for (std::size_t c = 0; c + 1 < m.dim; ++c) x[c] = a.x[c] / last;
    x[m.dim - 1] = 1.0;
    out.atoms.push_back({std::move(x), a.w * last});
  }
  return out;
}

}  // namespace phc
