#pragma once

#include <stdexcept>
#include <string>

#include "phc/kernel.hpp"
#include "phc/measure.hpp"
#include "phc/order.hpp"
#include "phc/support_function.hpp"

namespace phc {

// Malformed input file; message carries a field-level diagnostic.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

DiscreteMeasure parse_measure(const std::string& text);
DiscreteMeasure load_measure(const std::string& path);

DiscreteKernel parse_kernel(const std::string& text);
DiscreteKernel load_kernel(const std::string& path);

PolyhedralSupportFunction parse_support_function(const std::string& text);
PolyhedralSupportFunction load_support_function(const std::string& path);

SphericalFunctionSamples parse_spherical_samples(const std::string& text);
SphericalFunctionSamples load_spherical_samples(const std::string& path);

// Doubles are serialized with 17 significant digits so every emitted file
// re-parses to an equal value.
std::string format_double(double v);

std::string to_json(const DiscreteMeasure& m);
std::string to_json(const DiscreteKernel& q);
std::string to_json(const PolyhedralSupportFunction& f);
std::string to_json(const ConvexPolyhedralFunction& f);

struct VerdictStats {
  long pivots = 0;
  long runtime_ms = 0;
};
std::string to_json(const OrderVerdict& v, const VerdictStats& stats);

}  // namespace phc
