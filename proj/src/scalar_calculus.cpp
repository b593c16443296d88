#include "vfrac/scalar_calculus.hpp"

#include <cmath>

#include "vfrac/errors.hpp"
#include "vfrac/special_functions.hpp"

namespace vfrac {

namespace {

void require_derivative_preconditions(double t, const ParameterSet& params,
                                      const char* op) {
  params.validate();
  if (!(t > 0.0)) {
    throw DomainError(std::string(op) + ": t > 0 violated");
  }
  if (params.trunc_i < 1) {
    throw DomainError(std::string(op) +
                      ": trunc_i >= 1 required for derivative operators");
  }
}

}  // namespace

LimitResult v_derivative_limit(const ScalarMap& f, double t,
                               const ParameterSet& params,
                               const LimitConfig& cfg) {
  require_derivative_preconditions(t, params, "v_derivative_limit");
  cfg.validate();
  if (!params.is_real()) {
    throw DomainError(
        "v_derivative_limit: limit evaluation requires a real parameter set; "
        "complex parameters are served by the closed-form interface");
  }
  const HSeries series(params);
  const double f0 = f(t);
  if (!std::isfinite(f0)) {
    throw DomainError("v_derivative_limit: f(t) is not finite");
  }
  const double t_pow = std::pow(t, -params.alpha);
  auto quotient = [&](double eps) {
    const double probe = t * series.h_real(eps * t_pow);
    if (!(probe > 0.0)) {
      throw DomainError("v_derivative_limit: probe point left t > 0");
    }
    const double fp = f(probe);
    if (!std::isfinite(fp)) {
      throw DomainError("v_derivative_limit: f(probe) is not finite");
    }
    return (fp - f0) / eps;
  };
  return detail::richardson_limit(quotient, cfg);
}

Complex v_derivative_closed_complex(const ScalarMap& f_prime, double t,
                                    const ParameterSet& params) {
  require_derivative_preconditions(t, params, "v_derivative_closed");
  const double fp = f_prime(t);
  if (!std::isfinite(fp)) {
    throw DomainError("v_derivative_closed: f'(t) is not finite");
  }
  return coefficient_c(params) * std::pow(t, 1.0 - params.alpha) * fp;
}

double v_derivative_closed(const ScalarMap& f_prime, double t,
                           const ParameterSet& params) {
  const Complex v = v_derivative_closed_complex(f_prime, t, params);
  if (std::abs(v.imag()) > 1e-10 * std::abs(v.real())) {
    throw DomainError(
        "v_derivative_closed: value has a nonnegligible imaginary part; "
        "use the complex interface");
  }
  return v.real();
}

double v_derivative_numeric(const ScalarMap& f, double t,
                            const ParameterSet& params) {
  require_derivative_preconditions(t, params, "v_derivative_numeric");
  const double h = t * 1e-6;
  if (!(t - 2.0 * h > 0.0)) {
    throw DomainError("v_derivative_numeric: stencil exits t > 0");
  }
  const double fm2 = f(t - 2.0 * h), fm1 = f(t - h);
  const double fp1 = f(t + h), fp2 = f(t + 2.0 * h);
  if (!std::isfinite(fm2) || !std::isfinite(fm1) || !std::isfinite(fp1) ||
      !std::isfinite(fp2)) {
    throw DomainError("v_derivative_numeric: f not finite on the stencil");
  }
  const double d = (-fp2 + 8.0 * fp1 - 8.0 * fm1 + fm2) / (12.0 * h);
  return coefficient_c_real(params) * std::pow(t, 1.0 - params.alpha) * d;
}

double power_rule(double exponent, double t, const ParameterSet& params) {
  require_derivative_preconditions(t, params, "power_rule");
  return coefficient_c_real(params) * exponent *
         std::pow(t, exponent - params.alpha);
}

LimitResult chain_rule(const ScalarMap& f_prime, const ScalarMap& g, double t,
                       const ParameterSet& params, const LimitConfig& cfg) {
  const LimitResult inner = v_derivative_limit(g, t, params, cfg);
  const double scale = f_prime(g(t));
  if (!std::isfinite(scale)) {
    throw DomainError("chain_rule: f'(g(t)) is not finite");
  }
  return LimitResult{scale * inner.value,
                     std::abs(scale) * inner.error_estimate};
}

double v_integral(const ScalarMap& f, double a, double t,
                  const ParameterSet& params, const QuadratureConfig& cfg) {
  params.validate();
  if (!(a >= 0.0)) throw DomainError("v_integral: a >= 0 violated");
  if (!(t > a)) throw DomainError("v_integral: t > a violated");
  const double c = coefficient_c_real(params);
  return integrate_weighted(f, Interval{a, t}, params.alpha, cfg) / c;
}

double fundamental_check(const ScalarMap& f, double a, double t,
                         const ParameterSet& params, const LimitConfig& cfgL,
                         const QuadratureConfig& cfgQ) {
  if (!(a > 0.0)) throw DomainError("fundamental_check: a > 0 violated");
  if (!(t > a)) throw DomainError("fundamental_check: t > a violated");
  auto antiderivative = [&](double s) {
    return v_integral(f, a, s, params, cfgQ);
  };
  const LimitResult d = v_derivative_limit(antiderivative, t, params, cfgL);
  return std::abs(d.value - f(t));
}

}  // namespace vfrac
