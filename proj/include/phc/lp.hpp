#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace phc {

using Vec = std::vector<double>;
using Mat = std::vector<Vec>;  // dense, row major

// Post-solve residual verification failed; signals tolerance
// misconfiguration, never a silent wrong answer.
struct NumericalBreakdown : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr double kFeasTol = 1e-8;
inline constexpr double kCertTol = 1e-9;

enum class LPStatus { Optimal, Infeasible, Unbounded };

// Outcome of min <c, z> s.t. A z = b, z >= 0.
//   Optimal:    z, value, dual y with A z = b, z >= 0, complementary slackness.
//   Infeasible: farkas y with A'y >= 0 componentwise and <b, y> < 0,
//               rescaled to unit max-norm.
//   Unbounded:  ray r >= 0 with A r = 0 and <c, r> < 0.
struct LPOutcome {
  LPStatus status = LPStatus::Optimal;
  Vec z;
  double value = 0;
  Vec dual;
  Vec farkas;
  Vec ray;
  long pivots = 0;
};

LPOutcome solve(const Mat& A, const Vec& b, const Vec& c,
                double feas_tol = kFeasTol, double cert_tol = kCertTol);

struct FeasibilityOutcome {
  bool feasible = false;
  Vec z;       // when feasible
  Vec farkas;  // when not
  long pivots = 0;
};

// Phase-1 only: find z >= 0 with A z = b, or a Farkas certificate.
FeasibilityOutcome feasibility(const Mat& A, const Vec& b,
                               double feas_tol = kFeasTol,
                               double cert_tol = kCertTol);

}  // namespace phc
