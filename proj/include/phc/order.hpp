#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "phc/kernel.hpp"
#include "phc/measure.hpp"
#include "phc/support_function.hpp"

namespace phc {

// f(x) = max_i (<b_i, x> + a_i).
struct ConvexPolyhedralFunction {
  std::size_t dim = 1;
  std::vector<std::pair<Point, double>> pieces;  // (gradient, offset)
};

double eval(const ConvexPolyhedralFunction& f, const Point& x);
double integrate(const ConvexPolyhedralFunction& f, const DiscreteMeasure& m);

// Decision outcome: a verified kernel witness when the order holds, a
// verified separating function (support function for phc, convex polyhedral
// function for cx) with its violation margin otherwise.
struct OrderVerdict {
  bool holds = false;
  std::optional<DiscreteKernel> kernel;
  std::optional<PolyhedralSupportFunction> support_certificate;
  std::optional<ConvexPolyhedralFunction> convex_certificate;
  double gap = 0;
  long pivots = 0;
};

// Decides m <=_phc n: either a moment-preserving kernel in Q_m(m, n) exists
// or a polyhedral support function f with int f dm > int f dn.
OrderVerdict check_phc(const DiscreteMeasure& m, const DiscreteMeasure& n,
                       double tol = kDefaultTol);

// Decides m <=_cx n via the martingale-coupling LP; requires equal mass.
OrderVerdict check_cx(const DiscreteMeasure& m, const DiscreteMeasure& n,
                      double tol = kDefaultTol);

struct BarycentricCostResult {
  double value = 0;
  DiscreteKernel argmin;
  bool l2_is_upper_bound = false;
};

// BarC(m, n) = inf over transporting kernels of sum_i m_i dist(x_i, ba(q^{x_i})).
// Exact LP for L1; the L2 value is the Euclidean deviation of the L1
// optimizer (an upper bound, exact when the optimum is 0).
BarycentricCostResult barycentric_cost(const DiscreteMeasure& m,
                                       const DiscreteMeasure& n, Norm norm,
                                       double tol = kDefaultTol);

struct DualProbeResult {
  bool consistent = true;
  std::optional<PolyhedralSupportFunction> violator;
};

// Monte-Carlo necessary-condition check: a false result proves non-order and
// reports the violating support function; true is only evidence.
DualProbeResult dual_probe(const DiscreteMeasure& m, const DiscreteMeasure& n,
                           int trials, std::size_t k, std::uint64_t seed,
                           double tol = 1e-7);

}  // namespace phc
