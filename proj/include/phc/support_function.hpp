#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "phc/measure.hpp"

namespace phc {

// f(x) = max_k <c_k, x>: convex and positively 1-homogeneous by construction.
struct PolyhedralSupportFunction {
  std::size_t dim = 1;
  std::vector<Point> gradients;
};

// Finitely sampled spherical data: constraint directions u_k (unit length)
// with values f_k, defining the Wulff shape {x : <x, u_k> <= f_k}.
struct SphericalFunctionSamples {
  std::size_t dim = 1;
  std::vector<Point> directions;
  std::vector<double> values;
};

struct WulffUnbounded : std::runtime_error {
  WulffUnbounded() : std::runtime_error("Wulff shape is unbounded in the probed direction") {}
};
struct WulffInfeasible : std::runtime_error {
  WulffInfeasible() : std::runtime_error("Wulff shape is empty") {}
};

double support_eval(const PolyhedralSupportFunction& f, const Point& x);

double integrate(const PolyhedralSupportFunction& f, const DiscreteMeasure& m);

// Support value of the Wulff shape in direction w: max <x, w> subject to
// <x, u_k> <= f_k. Throws WulffUnbounded / WulffInfeasible.
double wulff_support(const SphericalFunctionSamples& f, const Point& w);

// k standard-Gaussian gradients, deterministic given the seed.
PolyhedralSupportFunction random_support_function(std::size_t dim, std::size_t k,
                                                  std::uint64_t seed);

}  // namespace phc
