#include "phc/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace phc {
namespace {

void check_alignment(const std::vector<Point>& pts, const DiscreteMeasure& m,
                     double tol, const char* who) {
  if (pts.size() != m.atoms.size() ||
      (m.atoms.size() > 0 && m.atoms[0].x.size() != (pts.empty() ? m.dim : pts[0].size())))
    throw std::invalid_argument(std::string(who) + ": source/measure misalignment");
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (dist(pts[i], m.atoms[i].x, Norm::L2) > tol * (1 + l2norm(pts[i])))
      throw std::invalid_argument(std::string(who) + ": source atom location mismatch");
}

void check_points_aligned(const std::vector<Point>& a, const std::vector<Point>& b,
                          double tol, const char* who) {
  if (a.size() != b.size())
    throw std::invalid_argument(std::string(who) + ": atom list size mismatch");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (dist(a[i], b[i], Norm::L2) > tol * (1 + l2norm(a[i])))
      throw std::invalid_argument(std::string(who) + ": atom location mismatch");
}

Point row_barycenter(const DiscreteKernel& q, std::size_t i) {
  Point ba(q.dim, 0.0);
  for (std::size_t j = 0; j < q.targets.size(); ++j)
    for (std::size_t c = 0; c < q.dim; ++c) ba[c] += q.weights[i][j] * q.targets[j][c];
  return ba;
}

}  // namespace

DiscreteKernel identity_kernel(const DiscreteMeasure& m) {
  DiscreteKernel q;
  q.dim = m.dim;
  for (const auto& a : m.atoms) {
    q.source.push_back(a.x);
    q.targets.push_back(a.x);
  }
  q.weights.assign(m.atoms.size(), std::vector<double>(m.atoms.size(), 0.0));
  for (std::size_t i = 0; i < m.atoms.size(); ++i) q.weights[i][i] = 1.0;
  return q;
}

DiscreteMeasure apply(const DiscreteKernel& q, const DiscreteMeasure& m, double tol) {
  check_alignment(q.source, m, tol, "apply");
  DiscreteMeasure out;
  out.dim = q.dim;
  for (std::size_t j = 0; j < q.targets.size(); ++j) {
    double w = 0;
    for (std::size_t i = 0; i < q.source.size(); ++i) w += m.atoms[i].w * q.weights[i][j];
    out.atoms.push_back({q.targets[j], w});
  }
  return normalize_merge(out, tol);
}

bool is_transport(const DiscreteKernel& q, const DiscreteMeasure& m,
                  const DiscreteMeasure& target, double tol) {
  DiscreteMeasure pushed = apply(q, m, tol);
  return measure_approx_equal(pushed, normalize_merge(target, tol), tol);
}

bool is_moment_preserving(const DiscreteKernel& q, const DiscreteMeasure& m,
                          double tol) {
  check_alignment(q.source, m, tol, "is_moment_preserving");
  for (std::size_t i = 0; i < q.source.size(); ++i) {
    if (m.atoms[i].w <= tol) continue;
    Point ba = row_barycenter(q, i);
    if (dist(ba, q.source[i], Norm::L2) > tol * (1 + l2norm(q.source[i]))) return false;
  }
  return true;
}

DiscreteKernel glue(const DiscreteKernel& p, const DiscreteKernel& q, double tol) {
  check_points_aligned(p.targets, q.source, tol, "glue");
  DiscreteKernel r;
  r.dim = p.dim;
  r.source = p.source;
  r.targets = q.targets;
  r.weights.assign(p.source.size(), std::vector<double>(q.targets.size(), 0.0));
  for (std::size_t i = 0; i < p.source.size(); ++i)
    for (std::size_t k = 0; k < p.targets.size(); ++k) {
      const double pik = p.weights[i][k];
      if (pik == 0) continue;
      for (std::size_t j = 0; j < q.targets.size(); ++j)
        r.weights[i][j] += pik * q.weights[k][j];
    }
  return r;
}

double barycentric_deviation(const DiscreteKernel& q, const DiscreteMeasure& m,
                             Norm norm, double tol) {
  check_alignment(q.source, m, tol, "barycentric_deviation");
  double s = 0;
  for (std::size_t i = 0; i < q.source.size(); ++i)
    s += m.atoms[i].w * dist(q.source[i], row_barycenter(q, i), norm);
  return s;
}

DiscreteKernel sphere_kernel(const DiscreteMeasure& m, double tol) {
  const DiscreteMeasure marg = homogeneous_marginal(m, tol);
  double scale = 0;
  for (const auto& a : m.atoms) scale = std::max(scale, l2norm(a.x));
  const double zero_thresh = tol * (1 + scale);

  DiscreteKernel q;
  q.dim = m.dim;
  for (const auto& a : m.atoms) q.source.push_back(a.x);
  for (const auto& a : marg.atoms) q.targets.push_back(a.x);
  q.weights.assign(m.atoms.size(), std::vector<double>(marg.atoms.size(), 0.0));

  for (std::size_t i = 0; i < m.atoms.size(); ++i) {
    const double r = l2norm(m.atoms[i].x);
    if (r <= zero_thresh) continue;  // p^0 = 0
    Point u(m.atoms[i].x);
    for (double& v : u) v /= r;
    // Nearest sphere atom of the merged marginal.
    std::size_t best = marg.atoms.size();
    double bestd = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < marg.atoms.size(); ++j) {
      double d = dist(u, marg.atoms[j].x, Norm::L2);
      if (d < bestd) {
        bestd = d;
        best = j;
      }
    }
    if (best == marg.atoms.size())
      throw std::invalid_argument("sphere_kernel: no marginal atom for nonzero source");
    q.weights[i][best] = r;
  }
  return q;
}

DiscreteKernel inverse_sphere_kernel(const DiscreteMeasure& m, double tol) {
  if (m.atoms.empty())
    throw std::invalid_argument("inverse_sphere_kernel: empty measure");
  const DiscreteMeasure marg = homogeneous_marginal(m, tol);
  if (marg.atoms.empty())
    throw std::invalid_argument(
        "inverse_sphere_kernel: measure is a multiple of delta_0");
  const double sphere_mass = mass(marg);

  double scale = 0;
  for (const auto& a : m.atoms) scale = std::max(scale, l2norm(a.x));
  const double zero_thresh = tol * (1 + scale);

  double zero_mass = 0;
  for (const auto& a : m.atoms)
    if (l2norm(a.x) <= zero_thresh) zero_mass += a.w;

  DiscreteKernel q;
  q.dim = m.dim;
  for (const auto& a : marg.atoms) q.source.push_back(a.x);
  for (const auto& a : m.atoms) q.targets.push_back(a.x);
  q.weights.assign(marg.atoms.size(), std::vector<double>(m.atoms.size(), 0.0));

  for (std::size_t ui = 0; ui < marg.atoms.size(); ++ui) {
    // Ray group: nonzero atoms whose direction merges with marginal atom ui.
    double denom = 0;
    std::vector<std::size_t> group;
    for (std::size_t k = 0; k < m.atoms.size(); ++k) {
      const double r = l2norm(m.atoms[k].x);
      if (r <= zero_thresh) continue;
      Point dir(m.atoms[k].x);
      for (double& v : dir) v /= r;
      std::size_t best = marg.atoms.size();
      double bestd = std::numeric_limits<double>::infinity();
      for (std::size_t j = 0; j < marg.atoms.size(); ++j) {
        double d = dist(dir, marg.atoms[j].x, Norm::L2);
        if (d < bestd) {
          bestd = d;
          best = j;
        }
      }
      if (best == ui) {
        group.push_back(k);
        denom += m.atoms[k].w * r;
      }
    }
    if (group.empty() || denom <= 0)
      throw std::invalid_argument("inverse_sphere_kernel: empty ray group");
    for (std::size_t k : group) q.weights[ui][k] = m.atoms[k].w / denom;
    // delta_0 correction, spread over the atoms at the origin.
    for (std::size_t k = 0; k < m.atoms.size(); ++k)
      if (l2norm(m.atoms[k].x) <= zero_thresh)
        q.weights[ui][k] = m.atoms[k].w / sphere_mass;
  }
  return q;
}

}  // namespace phc
