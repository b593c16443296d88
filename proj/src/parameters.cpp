#include "vfrac/parameters.hpp"

#include <cmath>

#include "vfrac/errors.hpp"

namespace vfrac {

namespace {

bool finite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

}  // namespace

void ParameterSet::validate() const {
  if (!finite(gamma_p) || !finite(beta_p) || !finite(rho_p) ||
      !finite(delta_p) || !std::isfinite(p_step) || !std::isfinite(q_step) ||
      !std::isfinite(alpha)) {
    throw UsageError("parameters must be finite");
  }
  if (!(gamma_p.real() > 0.0)) throw UsageError("Re(gamma) > 0 violated");
  if (!(beta_p.real() > 0.0)) throw UsageError("Re(beta) > 0 violated");
  if (!(rho_p.real() > 0.0)) throw UsageError("Re(rho) > 0 violated");
  if (!(delta_p.real() > 0.0)) throw UsageError("Re(delta) > 0 violated");
  if (!(p_step > 0.0)) throw UsageError("p > 0 violated");
  if (!(q_step > 0.0)) throw UsageError("q > 0 violated");
  if (!(gamma_p.real() + p_step >= q_step)) {
    throw UsageError("Re(gamma)+p >= q violated");
  }
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw UsageError("alpha in (0,1] violated");
  }
  if (trunc_i < 0) throw UsageError("trunc_i >= 0 violated");
}

bool ParameterSet::is_real() const {
  return gamma_p.imag() == 0.0 && beta_p.imag() == 0.0 &&
         rho_p.imag() == 0.0 && delta_p.imag() == 0.0;
}

ParameterSet ParameterSet::with_alpha(double a) const {
  ParameterSet out = *this;
  out.alpha = a;
  return out;
}

ParameterSet ParameterSet::with_trunc(int i) const {
  ParameterSet out = *this;
  out.trunc_i = i;
  return out;
}

ParameterSet ParameterSet::unit(double alpha, int trunc_i) {
  ParameterSet out;
  out.trunc_i = trunc_i;
  out.alpha = alpha;
  return out;
}

ParameterSet ParameterSet::real(double gamma, double beta, double rho,
                                double delta, double p, double q, int trunc_i,
                                double alpha) {
  ParameterSet out;
  out.gamma_p = Complex(gamma, 0.0);
  out.beta_p = Complex(beta, 0.0);
  out.rho_p = Complex(rho, 0.0);
  out.delta_p = Complex(delta, 0.0);
  out.p_step = p;
  out.q_step = q;
  out.trunc_i = trunc_i;
  out.alpha = alpha;
  return out;
}

}  // namespace vfrac
