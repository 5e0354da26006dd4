#pragma once

#include <vector>

#include "phc/measure.hpp"

namespace phc {

// Unnormalized kernel between finite atom lists: row i is the finite measure
// q^{x_i} = sum_j Q_ij delta_{y_j}. Rows may be zero.
struct DiscreteKernel {
  std::size_t dim = 1;
  std::vector<Point> source;
  std::vector<Point> targets;
  std::vector<std::vector<double>> weights;  // [source][target], >= 0
};

DiscreteKernel identity_kernel(const DiscreteMeasure& m);

// Pushforward: weight_j = sum_i m_i Q_ij, merged to canonical form.
// The measure's atoms must align positionally with the kernel's source list.
DiscreteMeasure apply(const DiscreteKernel& q, const DiscreteMeasure& m,
                      double tol = kDefaultTol);

bool is_transport(const DiscreteKernel& q, const DiscreteMeasure& m,
                  const DiscreteMeasure& target, double tol = kDefaultTol);

// Row barycenter equals the source point, checked only for atoms of weight
// above tol (the a.e. quantifier at finite support).
bool is_moment_preserving(const DiscreteKernel& q, const DiscreteMeasure& m,
                          double tol = kDefaultTol);

// Kernel composition r^x = int q^y p^x(dy): the matrix product P * Q.
// p's targets must align with q's source.
DiscreteKernel glue(const DiscreteKernel& p, const DiscreteKernel& q,
                    double tol = kDefaultTol);

// sum_i m_i * dist(x_i, ba(q^{x_i})) in the chosen norm.
double barycentric_deviation(const DiscreteKernel& q, const DiscreteMeasure& m,
                             Norm norm, double tol = kDefaultTol);

// p^x = |x| delta_{x/|x|}, p^0 = 0; transports m to its homogeneous marginal
// and preserves moments.
DiscreteKernel sphere_kernel(const DiscreteMeasure& m, double tol = kDefaultTol);

// The disintegration kernel q^u from the homogeneous marginal back to m, with
// the delta_0 correction for mass at the origin. Errors when m is empty or a
// multiple of delta_0.
DiscreteKernel inverse_sphere_kernel(const DiscreteMeasure& m, double tol = kDefaultTol);

}  // namespace phc
