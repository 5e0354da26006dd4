#include "phc/support_function.hpp"

#include <algorithm>
#include <limits>
#include <random>

#include "phc/lp.hpp"

namespace phc {

double support_eval(const PolyhedralSupportFunction& f, const Point& x) {
  if (x.size() != f.dim)
    throw std::invalid_argument("support_eval: dimension mismatch");
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& g : f.gradients) best = std::max(best, dot(g, x));
  return best;
}

double integrate(const PolyhedralSupportFunction& f, const DiscreteMeasure& m) {
  if (m.dim != f.dim)
    throw std::invalid_argument("integrate: dimension mismatch");
  double s = 0;
  for (const auto& a : m.atoms) s += a.w * support_eval(f, a.x);
  return s;
}

double wulff_support(const SphericalFunctionSamples& f, const Point& w) {
  if (w.size() != f.dim)
    throw std::invalid_argument("wulff_support: dimension mismatch");
  if (f.directions.size() != f.values.size())
    throw std::invalid_argument("wulff_support: directions/values length mismatch");
  const std::size_t d = f.dim, k = f.directions.size();

  // max <x, w> s.t. <x, u_i> <= f_i, x free. Standard form with x = xp - xn
  // and slacks: minimize -<w, xp - xn>.
  Mat A(k, Vec(2 * d + k, 0.0));
  Vec b(k, 0.0), c(2 * d + k, 0.0);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      A[i][j] = f.directions[i][j];
      A[i][d + j] = -f.directions[i][j];
    }
    A[i][2 * d + i] = 1.0;
    b[i] = f.values[i];
  }
  for (std::size_t j = 0; j < d; ++j) {
    c[j] = -w[j];
    c[d + j] = w[j];
  }

  LPOutcome res = solve(A, b, c);
  switch (res.status) {
    case LPStatus::Optimal:
      return -res.value;
    case LPStatus::Unbounded:
      throw WulffUnbounded();
    case LPStatus::Infeasible:
      throw WulffInfeasible();
  }
  throw NumericalBreakdown("wulff_support: unreachable");
}

PolyhedralSupportFunction random_support_function(std::size_t dim, std::size_t k,
                                                  std::uint64_t seed) {
  if (dim < 1 || k < 1)
    throw std::invalid_argument("random_support_function: dim and k must be >= 1");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  PolyhedralSupportFunction f;
  f.dim = dim;
  f.gradients.resize(k);
  for (auto& g : f.gradients) {
    g.resize(dim);
    for (double& v : g) v = gauss(rng);
  }
  return f;
}

}  // namespace phc
