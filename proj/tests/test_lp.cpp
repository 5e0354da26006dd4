#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "phc/lp.hpp"

using namespace phc;

TEST_CASE("single-variable programs") {
  // min z1 s.t. z1 = 1
  auto r = solve({{1}}, {1}, {1});
  REQUIRE(r.status == LPStatus::Optimal);
  CHECK(r.z[0] == doctest::Approx(1.0));
  CHECK(r.value == doctest::Approx(1.0));

  // z1 = -1 is infeasible; certificate y = (1): A'y = (1) >= 0, <b,y> = -1.
  r = solve({{1}}, {-1}, {0});
  REQUIRE(r.status == LPStatus::Infeasible);
  CHECK(r.farkas[0] * -1 < 0);

  // min -z1 s.t. 0*z1 = 0 is unbounded along (1).
  r = solve({{0}}, {0}, {-1});
  REQUIRE(r.status == LPStatus::Unbounded);
  CHECK(r.ray[0] > 0);
}

TEST_CASE("feasibility") {
  auto r = feasibility({{1}}, {1});
  REQUIRE(r.feasible);
  CHECK(r.z[0] == doctest::Approx(1.0));

  r = feasibility({{1}}, {-1});
  REQUIRE_FALSE(r.feasible);

  // Duplicate rows with inconsistent rhs: y proportional to (1, -1).
  r = feasibility({{1, 1}, {1, 1}}, {1, 2});
  REQUIRE_FALSE(r.feasible);
  const Vec& y = r.farkas;
  CHECK(y[0] + y[1] == doctest::Approx(0.0).epsilon(1e-9));  // A'y = 0
  CHECK(y[0] * 1 + y[1] * 2 < -1e-9);
}

TEST_CASE("redundant rows are tolerated") {
  auto r = solve({{1, 0}, {1, 0}}, {1, 1}, {0, 1});
  REQUIRE(r.status == LPStatus::Optimal);
  CHECK(r.z[0] == doctest::Approx(1.0));
  CHECK(r.z[1] == doctest::Approx(0.0));
}

TEST_CASE("farkas certificates always verify") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(-2, 2);
  int infeasible_seen = 0;
  for (int t = 0; t < 400; ++t) {
    std::size_t m = 1 + t % 4, n = 1 + t % 6;
    Mat A(m, Vec(n));
    Vec b(m);
    for (auto& row : A)
      for (double& v : row) v = u(rng);
    for (double& v : b) v = u(rng);
    auto r = feasibility(A, b);
    if (r.feasible) continue;
    ++infeasible_seen;
    Vec aty(n, 0.0);
    double bty = 0, mx = 0;
    for (std::size_t i = 0; i < m; ++i) {
      bty += b[i] * r.farkas[i];
      mx = std::max(mx, std::abs(r.farkas[i]));
      for (std::size_t j = 0; j < n; ++j) aty[j] += A[i][j] * r.farkas[i];
    }
    CHECK(mx == doctest::Approx(1.0));
    for (double v : aty) CHECK(v >= -1e-9);
    CHECK(bty <= -1e-9);
  }
  CHECK(infeasible_seen > 10);
}

TEST_CASE("agreement with basis enumeration oracle") {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> u(-2, 2);
  int optimal_seen = 0;
  for (int t = 0; t < 300; ++t) {
    std::size_t m = 1 + t % 4, n = m + t % (7 - m);
    Mat A(m, Vec(n));
    Vec b(m), c(n);
    for (auto& row : A)
      for (double& v : row) v = u(rng);
    for (double& v : b) v = u(rng);
    for (double& v : c) v = std::abs(u(rng)) + 0.1;  // bounded below
    auto oracle = phc::testing::enumerate_bases(A, b, c);
    auto r = solve(A, b, c);
    if (r.status == LPStatus::Infeasible) {
      CHECK_FALSE(oracle.any_feasible);
      continue;
    }
    REQUIRE(r.status == LPStatus::Optimal);
    REQUIRE(oracle.any_feasible);
    CHECK(r.value ==
          doctest::Approx(oracle.best_value).epsilon(1e-7).scale(1 + std::abs(r.value)));
    ++optimal_seen;
  }
  CHECK(optimal_seen > 50);
}

TEST_CASE("determinism") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(-2, 2);
  Mat A(3, Vec(5));
  Vec b(3), c(5);
  for (auto& row : A)
    for (double& v : row) v = u(rng);
  for (double& v : b) v = u(rng);
  for (double& v : c) v = u(rng);
  auto r1 = solve(A, b, c);
  auto r2 = solve(A, b, c);
  CHECK(r1.status == r2.status);
  CHECK(r1.z == r2.z);
  CHECK(r1.dual == r2.dual);
  CHECK(r1.value == r2.value);
}

TEST_CASE("weak duality on random optimal instances") {
  std::mt19937_64 rng(37);
  std::uniform_real_distribution<double> u(-2, 2);
  for (int t = 0; t < 100; ++t) {
    std::size_t m = 1 + t % 3, n = m + 2;
    Mat A(m, Vec(n));
    Vec b(m), c(n);
    for (auto& row : A)
      for (double& v : row) v = u(rng);
    for (double& v : b) v = u(rng);
    for (double& v : c) v = std::abs(u(rng));
    auto r = solve(A, b, c);
    if (r.status != LPStatus::Optimal) continue;
    double bty = 0;
    for (std::size_t i = 0; i < m; ++i) bty += b[i] * r.dual[i];
    CHECK(r.value >= bty - 1e-7 * (1 + std::abs(bty)));
  }
}

TEST_CASE("malformed programs are rejected") {
  CHECK_THROWS_AS(solve({{1, 2}, {1}}, {1, 1}, {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(solve({{1}}, {1, 2}, {0}), std::invalid_argument);
  CHECK_THROWS_AS(solve({{std::numeric_limits<double>::quiet_NaN()}}, {1}, {0}),
                  std::invalid_argument);
}
