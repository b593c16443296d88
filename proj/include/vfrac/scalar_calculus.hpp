#pragma once

#include "vfrac/limit.hpp"
#include "vfrac/maps.hpp"
#include "vfrac/parameters.hpp"
#include "vfrac/quadrature.hpp"

namespace vfrac {

// One-variable fractional derivative of order alpha at t > 0, as the
// extrapolated limit of
//   [f(t * H(eps * t^-alpha)) - f(t)] / eps,  eps -> 0,
// where H is the truncated series of the parameter set. The probe argument
// is the multiplicative perturbation t * H(...) exactly as defined; it is
// never simplified to the additive first-order form.
// Requires t > 0, trunc_i >= 1 and a real parameter set (complex parameter
// sets are served by the closed-form interface). Raises DomainError when a
// probe leaves f's domain and UnstableLimit from the extrapolation guard.
LimitResult v_derivative_limit(const ScalarMap& f, double t,
                               const ParameterSet& params,
                               const LimitConfig& cfg);

// Closed form C * t^(1-alpha) * f'(t) from the caller-supplied classical
// derivative. The complex variant carries non-real C through; the real
// wrapper raises DomainError when |Im| > 1e-10 * |Re|.
double v_derivative_closed(const ScalarMap& f_prime, double t,
                           const ParameterSet& params);
Complex v_derivative_closed_complex(const ScalarMap& f_prime, double t,
                                    const ParameterSet& params);

// Closed form with f' replaced by a 4th-order central difference with
// relative step h = t * 1e-6. DomainError if the stencil exits t > 0.
double v_derivative_numeric(const ScalarMap& f, double t,
                            const ParameterSet& params);

// C * exponent * t^(exponent - alpha), the derivative of t^exponent.
double power_rule(double exponent, double t, const ParameterSet& params);

// f'(g(t)) times the fractional derivative of g at t.
LimitResult chain_rule(const ScalarMap& f_prime, const ScalarMap& g, double t,
                       const ParameterSet& params, const LimitConfig& cfg);

// Fractional integral (1/C) * integral of f(x) x^(alpha-1) dx over [a, t].
double v_integral(const ScalarMap& f, double a, double t,
                  const ParameterSet& params, const QuadratureConfig& cfg);

// Residual |D(F)(t) - f(t)| where F(s) is the fractional integral of f from
// a to s and D is the limit-quotient derivative; the C and 1/C prefactors
// cancel analytically, so the residual measures the fundamental theorem.
double fundamental_check(const ScalarMap& f, double a, double t,
                         const ParameterSet& params, const LimitConfig& cfgL,
                         const QuadratureConfig& cfgQ);

}  // namespace vfrac
