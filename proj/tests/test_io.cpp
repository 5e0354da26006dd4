#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "phc/io.hpp"

using namespace phc;
using phc::testing::random_measure;

TEST_CASE("parse_measure accepts well-formed input") {
  auto m = parse_measure(R"({"dim":2,"atoms":[{"x":[1,0],"w":1},{"x":[0,1],"w":2}]})");
  CHECK(m.dim == 2);
  REQUIRE(m.atoms.size() == 2);
  CHECK(m.atoms[0].x == Point{1, 0});
  CHECK(m.atoms[1].w == 2.0);

  auto empty = parse_measure(R"({"dim":3,"atoms":[]})");
  CHECK(empty.dim == 3);
  CHECK(empty.atoms.empty());
}

TEST_CASE("parse_measure rejects malformed input with diagnostics") {
  CHECK_THROWS_AS(parse_measure("not json"), ParseError);
  CHECK_THROWS_AS(parse_measure(R"({"atoms":[]})"), ParseError);
  CHECK_THROWS_AS(parse_measure(R"({"dim":0,"atoms":[]})"), ParseError);
  CHECK_THROWS_AS(parse_measure(R"({"dim":2,"atoms":[{"x":[1],"w":1}]})"), ParseError);
  CHECK_THROWS_AS(parse_measure(R"({"dim":2,"atoms":[{"x":[1,0],"w":-1}]})"), ParseError);
  CHECK_THROWS_AS(parse_measure(R"({"dim":2,"atoms":[{"x":[1,"a"],"w":1}]})"), ParseError);

  try {
    parse_measure(R"({"dim":2,"atoms":[{"x":[1,0]}]})");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("atoms[0]") != std::string::npos);
  }
}

TEST_CASE("parse_kernel") {
  auto q = parse_kernel(
      R"({"dim":1,"source":[[1]],"targets":[[2],[0]],"Q":[[0.5,0.25]]})");
  CHECK(q.dim == 1);
  REQUIRE(q.weights.size() == 1);
  CHECK(q.weights[0][1] == 0.25);

  CHECK_THROWS_AS(parse_kernel(R"({"dim":1,"source":[[1]],"targets":[[2]]})"),
                  ParseError);
  CHECK_THROWS_AS(
      parse_kernel(R"({"dim":1,"source":[[1]],"targets":[[2]],"Q":[[1],[1]]})"),
      ParseError);
  CHECK_THROWS_AS(
      parse_kernel(R"({"dim":1,"source":[[1]],"targets":[[2]],"Q":[[-1]]})"),
      ParseError);
}

TEST_CASE("parse_support_function and spherical samples") {
  auto f = parse_support_function(R"({"dim":2,"gradients":[[1,0],[0,0]]})");
  CHECK(f.gradients.size() == 2);
  CHECK_THROWS_AS(parse_support_function(R"({"dim":2,"gradients":[]})"), ParseError);

  auto s = parse_spherical_samples(
      R"({"dim":2,"directions":[[1,0],[0,1]],"values":[1,2]})");
  CHECK(s.values[1] == 2.0);
  CHECK_THROWS_AS(parse_spherical_samples(
                      R"({"dim":2,"directions":[[1,1]],"values":[1]})"),
                  ParseError);
  CHECK_THROWS_AS(parse_spherical_samples(
                      R"({"dim":2,"directions":[[1,0]],"values":[1,2]})"),
                  ParseError);
}

TEST_CASE("format_double round-trips exactly") {
  std::mt19937_64 rng(151);
  std::uniform_real_distribution<double> u(-1e6, 1e6);
  for (int t = 0; t < 1000; ++t) {
    double v = u(rng) / (1 + t % 17);
    CHECK(std::stod(format_double(v)) == v);
  }
  CHECK(std::stod(format_double(1.0 / 3.0)) == 1.0 / 3.0);
  CHECK(format_double(0.0) == "0");
}

TEST_CASE("measure emit/parse round-trip is exact") {
  std::mt19937_64 rng(157);
  for (int t = 0; t < 50; ++t) {
    auto m = random_measure(rng, 1 + t % 3, 6);
    auto back = parse_measure(to_json(m));
    CHECK(back.dim == m.dim);
    REQUIRE(back.atoms.size() == m.atoms.size());
    for (std::size_t i = 0; i < m.atoms.size(); ++i) {
      CHECK(back.atoms[i].x == m.atoms[i].x);
      CHECK(back.atoms[i].w == m.atoms[i].w);
    }
    // Emission itself is stable.
    CHECK(to_json(back) == to_json(m));
  }
}

TEST_CASE("kernel and function emit/parse round-trips") {
  DiscreteKernel q{2, {{1, 0}, {0, 1}}, {{0.5, 0.5}}, {{1.0 / 3.0}, {0.25}}};
  auto qb = parse_kernel(to_json(q));
  CHECK(qb.source == q.source);
  CHECK(qb.targets == q.targets);
  CHECK(qb.weights == q.weights);

  PolyhedralSupportFunction f{2, {{1.0 / 7.0, 0}, {0, -2}}};
  auto fb = parse_support_function(to_json(f));
  CHECK(fb.gradients == f.gradients);
}

TEST_CASE("verdict serialization") {
  OrderVerdict v;
  v.holds = true;
  v.kernel = DiscreteKernel{1, {{1}}, {{2}}, {{0.5}}};
  auto s = to_json(v, VerdictStats{7, 0});
  CHECK(s.find("\"holds\":true") != std::string::npos);
  CHECK(s.find("\"pivots\":7") != std::string::npos);
  CHECK(s.find("\"runtime_ms\":0") != std::string::npos);
  CHECK(s.find("\"Q\":[[0.5]]") != std::string::npos);

  OrderVerdict bad;
  bad.holds = false;
  bad.support_certificate = PolyhedralSupportFunction{1, {{-1}}};
  bad.gap = 1.0;
  auto sb = to_json(bad, VerdictStats{});
  CHECK(sb.find("\"holds\":false") != std::string::npos);
  CHECK(sb.find("\"gradients\":[[-1]]") != std::string::npos);
  CHECK(sb.find("\"gap\":1") != std::string::npos);

  OrderVerdict none;
  CHECK(to_json(none, VerdictStats{}).find("\"witness\":null") != std::string::npos);
}

TEST_CASE("load_measure reports missing files") {
  CHECK_THROWS_AS(load_measure("/nonexistent/path.json"), ParseError);
}
