#include "phc/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace phc {
namespace {

constexpr double kPivotEps = 1e-9;

void check_well_formed(const Mat& A, const Vec& b, const Vec* c) {
  const std::size_t m = A.size();
  if (b.size() != m) throw std::invalid_argument("lp: |b| != row count of A");
  std::size_t n = m == 0 ? (c ? c->size() : 0) : A[0].size();
  for (const auto& row : A)
    if (row.size() != n) throw std::invalid_argument("lp: ragged constraint matrix");
  if (c && c->size() != n) throw std::invalid_argument("lp: |c| != column count of A");
  auto finite = [](double v) { return std::isfinite(v); };
  for (const auto& row : A)
    for (double v : row)
      if (!finite(v)) throw std::invalid_argument("lp: non-finite entry in A");
  for (double v : b)
    if (!finite(v)) throw std::invalid_argument("lp: non-finite entry in b");
  if (c)
    for (double v : *c)
      if (!finite(v)) throw std::invalid_argument("lp: non-finite entry in c");
}

// Dense two-phase primal simplex with Bland's rule. Columns are the n
// structural variables followed by one artificial per original row, then the
// right-hand side. Redundant rows discovered at the end of phase 1 are
// dropped; their duals are reported as 0.
class Simplex {
 public:
  Simplex(const Mat& A, const Vec& b, double feas_tol)
      : n_(A.empty() ? 0 : A[0].size()), morig_(A.size()), feas_tol_(feas_tol) {
    // Row scaling to unit max-norm, then sign flips for b >= 0.
    row_scale_.assign(morig_, 1.0);
    for (std::size_t i = 0; i < morig_; ++i) {
      double mx = std::abs(b[i]);
      for (double v : A[i]) mx = std::max(mx, std::abs(v));
      double s = mx > 0 ? 1.0 / mx : 1.0;
      if (b[i] * s < 0) s = -s;
      row_scale_[i] = s;
    }
    width_ = n_ + morig_ + 1;
    t_.assign(morig_ * width_, 0.0);
    basis_.resize(morig_);
    orig_of_row_.resize(morig_);
    for (std::size_t i = 0; i < morig_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) t_[i * width_ + j] = A[i][j] * row_scale_[i];
      t_[i * width_ + n_ + i] = 1.0;
      t_[i * width_ + width_ - 1] = b[i] * row_scale_[i];
      basis_[i] = static_cast<long>(n_ + i);
      orig_of_row_[i] = static_cast<long>(i);
    }
    m_ = morig_;
  }

  // Returns true if a basic feasible solution was found.
  bool phase1() {
    cost_.assign(width_, 0.0);
    for (std::size_t j = 0; j < n_; ++j)
      for (std::size_t i = 0; i < m_; ++i) cost_[j] -= at(i, j);
    for (std::size_t i = 0; i < m_; ++i) cost_[width_ - 1] -= rhs(i);
    iterate(/*phase1=*/true);
    return -cost_[width_ - 1] <= feas_tol_;
  }

  // Phase-1 dual on the original rows, mapped back through scaling; this is
  // the raw material of the Farkas certificate.
  Vec phase1_dual() const {
    Vec y(morig_, 0.0);
    for (std::size_t i = 0; i < m_; ++i) {
      std::size_t oi = static_cast<std::size_t>(orig_of_row_[i]);
      double yi = 0;
      for (std::size_t k = 0; k < m_; ++k)
        if (basis_[k] >= static_cast<long>(n_)) yi += at(k, n_ + oi);
      y[oi] = yi * row_scale_[oi];
    }
    return y;
  }

  // Pivot artificials out of the basis; rows where that is impossible are
  // redundant and removed.
  void drop_artificials() {
    for (std::size_t i = 0; i < m_;) {
      if (basis_[i] < static_cast<long>(n_)) {
        ++i;
        continue;
      }
      std::size_t enter = n_;
      for (std::size_t j = 0; j < n_; ++j)
        if (std::abs(at(i, j)) > kPivotEps) {
          enter = j;
          break;
        }
      if (enter < n_) {
        pivot(i, enter);
        ++i;
      } else {
        erase_row(i);
      }
    }
  }

  // Runs phase 2 on objective c. Returns true when optimal, false when
  // unbounded (ray_ is then populated).
  bool phase2(const Vec& c) {
    cost_.assign(width_, 0.0);
    for (std::size_t j = 0; j < n_; ++j) cost_[j] = c[j];
    for (std::size_t i = 0; i < m_; ++i) {
      long bj = basis_[i];
      double cb = bj < static_cast<long>(n_) ? c[bj] : 0.0;
      if (cb == 0.0) continue;
      for (std::size_t j = 0; j < width_; ++j) cost_[j] -= cb * t_[i * width_ + j];
    }
    return iterate(/*phase1=*/false);
  }

  Vec primal() const {
    Vec z(n_, 0.0);
    for (std::size_t i = 0; i < m_; ++i)
      if (basis_[i] < static_cast<long>(n_)) z[basis_[i]] = std::max(0.0, rhs(i));
    return z;
  }

  double objective() const { return -cost_[width_ - 1]; }

  Vec dual() const {
    Vec y(morig_, 0.0);
    for (std::size_t i = 0; i < m_; ++i) {
      std::size_t oi = static_cast<std::size_t>(orig_of_row_[i]);
      y[oi] = -cost_[n_ + oi] * row_scale_[oi];
    }
    return y;
  }

  const Vec& ray() const { return ray_; }
  long pivots() const { return pivots_; }

 private:
  double at(std::size_t i, std::size_t j) const { return t_[i * width_ + j]; }
  double rhs(std::size_t i) const { return t_[i * width_ + width_ - 1]; }

  void pivot(std::size_t r, std::size_t e) {
    double* prow = &t_[r * width_];
    const double inv = 1.0 / prow[e];
    for (std::size_t j = 0; j < width_; ++j) prow[j] *= inv;
    prow[e] = 1.0;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r) continue;
      double* row = &t_[i * width_];
      const double f = row[e];
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < width_; ++j) row[j] -= f * prow[j];
      row[e] = 0.0;
    }
    const double f = cost_[e];
    if (f != 0.0) {
      for (std::size_t j = 0; j < width_; ++j) cost_[j] -= f * prow[j];
      cost_[e] = 0.0;
    }
    basis_[r] = static_cast<long>(e);
    ++pivots_;
  }

  void erase_row(std::size_t r) {
    t_.erase(t_.begin() + static_cast<long>(r * width_),
             t_.begin() + static_cast<long>((r + 1) * width_));
    basis_.erase(basis_.begin() + static_cast<long>(r));
    orig_of_row_.erase(orig_of_row_.begin() + static_cast<long>(r));
    --m_;
  }

  bool iterate(bool phase1) {
    const long cap = 50000 + 200 * static_cast<long>(n_ + morig_) * static_cast<long>(n_ + morig_);
    for (long it = 0; it < cap; ++it) {
      // Bland: lowest-index structural column with negative reduced cost.
      std::size_t enter = n_;
      for (std::size_t j = 0; j < n_; ++j)
        if (cost_[j] < -kPivotEps) {
          enter = j;
          break;
        }
      if (enter == n_) return true;
      // Ratio test; ties broken by lowest basic variable index.
      std::size_t leave = m_;
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < m_; ++i) {
        double a = at(i, enter);
        if (a <= kPivotEps) continue;
        double ratio = rhs(i) / a;
        if (ratio < best - 1e-12 ||
            (ratio < best + 1e-12 && (leave == m_ || basis_[i] < basis_[leave]))) {
          best = ratio;
          leave = i;
        }
      }
      if (leave == m_) {
        if (phase1)
          throw NumericalBreakdown("lp: phase-1 objective unbounded below");
        build_ray(enter);
        return false;
      }
      pivot(leave, enter);
    }
    throw NumericalBreakdown("lp: iteration cap exceeded");
  }

  void build_ray(std::size_t enter) {
    ray_.assign(n_, 0.0);
    ray_[enter] = 1.0;
    for (std::size_t i = 0; i < m_; ++i)
      if (basis_[i] < static_cast<long>(n_))
        ray_[basis_[i]] = std::max(0.0, -at(i, enter));
  }

  std::size_t n_, morig_, m_ = 0, width_ = 0;
  double feas_tol_;
  std::vector<double> t_;
  Vec cost_;
  std::vector<long> basis_;
  std::vector<long> orig_of_row_;
  Vec row_scale_;
  Vec ray_;
  long pivots_ = 0;
};

double max_abs(const Vec& v) {
  double mx = 0;
  for (double x : v) mx = std::max(mx, std::abs(x));
  return mx;
}

Vec mat_t_vec(const Mat& A, const Vec& y) {
  std::size_t n = A.empty() ? 0 : A[0].size();
  Vec r(n, 0.0);
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) r[j] += A[i][j] * y[i];
  return r;
}

Vec residual(const Mat& A, const Vec& b, const Vec& z) {
  Vec r(b);
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t j = 0; j < z.size(); ++j) r[i] -= A[i][j] * z[j];
  return r;
}

Vec verified_farkas(const Mat& A, const Vec& b, Vec y, double cert_tol) {
  double mx = max_abs(y);
  if (mx <= 0) throw NumericalBreakdown("lp: zero Farkas vector");
  // Orientation: phase-1 duals satisfy A'y <= 0, <b,y> > 0; the certificate
  // convention is the negated one.
  for (double& v : y) v = -v / mx;
  Vec aty = mat_t_vec(A, y);
  double bty = 0;
  for (std::size_t i = 0; i < b.size(); ++i) bty += b[i] * y[i];
  for (double v : aty)
    if (v < -cert_tol) throw NumericalBreakdown("lp: Farkas certificate violates A'y >= 0");
  if (bty > -cert_tol) throw NumericalBreakdown("lp: Farkas certificate lacks margin on <b,y>");
  return y;
}

}  // namespace

LPOutcome solve(const Mat& A, const Vec& b, const Vec& c, double feas_tol,
                double cert_tol) {
  check_well_formed(A, b, &c);
  const std::size_t n = c.size();

  LPOutcome out;
  if (A.empty()) {
    // No constraints: z = 0 unless some objective coefficient is negative.
    for (std::size_t j = 0; j < n; ++j)
      if (c[j] < -cert_tol) {
        out.status = LPStatus::Unbounded;
        out.ray.assign(n, 0.0);
        out.ray[j] = 1.0;
        return out;
      }
    out.status = LPStatus::Optimal;
    out.z.assign(n, 0.0);
    return out;
  }

  Simplex s(A, b, feas_tol);
  if (!s.phase1()) {
    out.status = LPStatus::Infeasible;
    out.farkas = verified_farkas(A, b, s.phase1_dual(), cert_tol);
    out.pivots = s.pivots();
    return out;
  }
  s.drop_artificials();
  if (!s.phase2(c)) {
    out.status = LPStatus::Unbounded;
    out.ray = s.ray();
    out.pivots = s.pivots();
    double cr = 0;
    for (std::size_t j = 0; j < n; ++j) cr += c[j] * out.ray[j];
    Vec ar = residual(A, Vec(A.size(), 0.0), out.ray);
    double scale = 1 + max_abs(out.ray);
    for (double v : ar)
      if (std::abs(v) > feas_tol * scale)
        throw NumericalBreakdown("lp: unbounded ray fails A r = 0");
    if (cr > -cert_tol) throw NumericalBreakdown("lp: unbounded ray lacks descent margin");
    return out;
  }

  out.status = LPStatus::Optimal;
  out.z = s.primal();
  out.value = s.objective();
  out.dual = s.dual();
  out.pivots = s.pivots();

  const double scale = 1 + std::max(max_abs(b), max_abs(out.z));
  Vec r = residual(A, b, out.z);
  for (double v : r)
    if (std::abs(v) > feas_tol * scale)
      throw NumericalBreakdown("lp: optimal solution fails A z = b");
  for (double v : out.z)
    if (v < -feas_tol) throw NumericalBreakdown("lp: optimal solution violates z >= 0");
  // Complementary slackness: z_j * (c_j - (A'y)_j) ~ 0.
  Vec aty = mat_t_vec(A, out.dual);
  double cs_scale = 1 + max_abs(c) + max_abs(aty);
  for (std::size_t j = 0; j < n; ++j)
    if (std::abs(out.z[j] * (c[j] - aty[j])) > feas_tol * cs_scale * (1 + std::abs(out.z[j])))
      throw NumericalBreakdown("lp: complementary slackness residual too large");
  double bty = 0;
  for (std::size_t i = 0; i < b.size(); ++i) bty += b[i] * out.dual[i];
  if (out.value < bty - feas_tol * (1 + std::abs(bty)))
    throw NumericalBreakdown("lp: weak duality violated");
  return out;
}

FeasibilityOutcome feasibility(const Mat& A, const Vec& b, double feas_tol,
                               double cert_tol) {
  check_well_formed(A, b, nullptr);
  FeasibilityOutcome out;
  if (A.empty()) {
    out.feasible = true;
    return out;
  }
  Simplex s(A, b, feas_tol);
  if (!s.phase1()) {
    out.feasible = false;
    out.farkas = verified_farkas(A, b, s.phase1_dual(), cert_tol);
    out.pivots = s.pivots();
    return out;
  }
  out.feasible = true;
  out.z = s.primal();
  out.pivots = s.pivots();
  const double scale = 1 + max_abs(b);
  Vec r = residual(A, b, out.z);
  for (double v : r)
    if (std::abs(v) > feas_tol * scale)
      throw NumericalBreakdown("lp: feasible point fails A z = b");
  return out;
}

}  // namespace phc
