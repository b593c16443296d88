#pragma once

#include <vector>

#include "vfrac/parameters.hpp"

namespace vfrac {

// log Gamma(z). Right half plane Re(z) >= 1/2 is evaluated directly by a
// Lanczos approximation; Re(z) < 1/2 goes through the reflection formula.
// For real z the imaginary part of the result is normalized to the
// principal value. Accuracy for real z in [0.1, 170] is better than 1e-12
// relative away from the zeros of log Gamma at z = 1 and z = 2, where the
// error is absolute at machine scale.
// Throws PoleError when z lies within 1e-12 of a nonpositive integer.
Complex log_gamma(Complex z);

// Generalized Pochhammer ratio Gamma(x + step*k) / Gamma(x).
// k = 0 returns exactly 1.
Complex pochhammer_gen(Complex x, double step, int k);

// Precomputed log-space term coefficients of the truncated series, for
// repeated evaluation at many arguments. Term k of the H series is
//   exp(log Gamma(beta) + logpoch(rho,q,k) - logpoch(delta,p,k)
//       - log Gamma(gamma*k + beta) + k*log z)
// where logpoch(x,s,k) = log Gamma(x+s*k) - log Gamma(x). The k = 0
// coefficient cancels analytically and is stored as exactly zero, which
// makes H(0) = 1 exact. The ML series divides every term by Gamma(beta).
class HSeries {
 public:
  explicit HSeries(const ParameterSet& params);

  Complex h(Complex z) const;
  Complex ml(Complex z) const;

  // Real fast path; requires a real parameter set (DomainError otherwise).
  double h_real(double z) const;

  // Value of term k of the ML series at z.
  Complex ml_term(int k, Complex z) const;

  int trunc_i() const { return static_cast<int>(log_coef_.size()) - 1; }
  bool real_coeffs() const { return real_; }

 private:
  std::vector<Complex> log_coef_;
  Complex log_gamma_beta_{0.0, 0.0};
  bool real_ = false;
};

// Truncated six-parameter Mittag-Leffler sum
//   sum_{k=0..trunc_i} [(rho)_{qk} / (delta)_{pk}] z^k / Gamma(gamma*k + beta)
// evaluated termwise in log space with compensated summation.
// Throws OverflowError when a term's log-magnitude exceeds double range.
Complex truncated_ml(const ParameterSet& params, Complex z);

// Gamma(beta) * truncated_ml. Equals 1 at z = 0 exactly.
Complex truncated_h(const ParameterSet& params, Complex z);

// Real wrapper for truncated_h; requires a real parameter set.
double truncated_h_real(const ParameterSet& params, double z);

// Leading series coefficient C = Gamma(beta)(rho)_q / [Gamma(gamma+beta)(delta)_p],
// the scalar relating the fractional derivative to the classical one.
Complex coefficient_c(const ParameterSet& params);

// Real wrapper; throws DomainError when |Im C| > 1e-10 * |Re C|.
double coefficient_c_real(const ParameterSet& params);

}  // namespace vfrac
