#pragma once

#include <complex>

namespace vfrac {

using Complex = std::complex<double>;

// Parameter set of the truncated six-parameter series: four complex shape
// parameters, two positive real Pochhammer steps, the truncation index and
// the derivative order alpha.
//
// Validity contract:
//   Re(gamma_p), Re(beta_p), Re(rho_p), Re(delta_p) > 0
//   p_step > 0, q_step > 0, Re(gamma_p) + p_step >= q_step
//   alpha in (0, 1], trunc_i >= 0
// trunc_i >= 1 is additionally required by every derivative operator (with
// trunc_i = 0 the series is constant and the limit quotient is identically
// zero); that check lives at the derivative call sites, not here.
struct ParameterSet {
  Complex gamma_p{1.0, 0.0};
  Complex beta_p{1.0, 0.0};
  Complex rho_p{1.0, 0.0};
  Complex delta_p{1.0, 0.0};
  double p_step = 1.0;
  double q_step = 1.0;
  int trunc_i = 2;
  double alpha = 0.5;

  // Throws UsageError naming the violated constraint.
  void validate() const;

  bool is_real() const;

  ParameterSet with_alpha(double a) const;
  ParameterSet with_trunc(int i) const;

  static ParameterSet unit(double alpha = 0.5, int trunc_i = 2);
  static ParameterSet real(double gamma, double beta, double rho, double delta,
                           double p, double q, int trunc_i, double alpha);
};

}  // namespace vfrac
