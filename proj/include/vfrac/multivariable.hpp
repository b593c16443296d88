#pragma once

#include <vector>

#include "vfrac/limit.hpp"
#include "vfrac/maps.hpp"
#include "vfrac/parameters.hpp"

namespace vfrac {

// Jacobian of a vector map under the fractional derivative, together with the
// base point and parameter set that produced it. entries is m x n where the
// map is R^n -> R^m.
struct VJacobian {
  Matrix entries;
  Point base;
  ParameterSet params;
};

// Fractional partial derivative of a scalar-valued map along one axis
// (1-based). The perturbation is multiplicative on that axis alone:
// a_j -> a_j * H(eps * a_j^{-alpha}); the quotient is extrapolated over the
// eps ladder. The base coordinate on the perturbed axis must be positive.
double v_partial(const VectorMap& f, const Point& a, int axis,
                 const ParameterSet& params, const LimitConfig& cfg);

// Full Jacobian: entries[j][p] = v_partial of component j along axis p.
// Equals the classical Jacobian right-multiplied by diag(C * a_p^{1-alpha}).
VJacobian v_jacobian(const VectorMap& f, const Point& a,
                     const ParameterSet& params, const LimitConfig& cfg);

// Classical Jacobian by 4th-order central differences with per-axis step
// h_p = max(|a_p|, 1) * 1e-6. Exposed for cross-checks.
Matrix classical_jacobian_fd(const VectorMap& f, const Point& a);

// Best-linear-map residual
//   ||f(a_1 H(eps_1 a_1^{-alpha}), ...) - f(a) - L(eps)|| / ||eps||
// with Euclidean norms. Decays linearly in ||eps|| exactly when L is the
// fractional Jacobian; a perturbed L makes the quotient plateau.
double linear_map_residual(const VectorMap& f, const Point& a, const Matrix& L,
                           const ParameterSet& params,
                           const std::vector<double>& eps_vec);

// Composition rule: classical Jacobian of g at f(a), matrix-multiplied by the
// fractional Jacobian of f at a. Requires every component of f(a) to be
// strictly positive.
Matrix chain_rule_multi(const VectorMap& g, const VectorMap& f, const Point& a,
                        const ParameterSet& params, const LimitConfig& cfg);

// Max over components j of the Euclidean distance between row j of the full
// Jacobian and the Jacobian of component j taken alone. Rows are assembled by
// the same per-component path, so this bounds evaluation-order noise only.
double componentwise_check(const VectorMap& f, const Point& a,
                           const ParameterSet& params, const LimitConfig& cfg);

// Gradient on R^2 with independent orders per axis: axis 1 at order alpha,
// axis 2 at order kappa. Both orders must lie in (0, 1].
std::vector<double> v_gradient(const VectorMap& f, const Point& a,
                               double alpha, double kappa,
                               const ParameterSet& params,
                               const LimitConfig& cfg);

}  // namespace vfrac
