#include "vfrac/special_functions.hpp"

#include <cmath>

#include "vfrac/detail/kahan.hpp"
#include "vfrac/errors.hpp"

namespace vfrac {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kHalfLogTwoPi = 0.918938533204672741780329736405617639;
// exp(x) overflows double a little above this.
constexpr double kOverflowLog = 709.0;
constexpr double kPoleTol = 1e-12;

// Lanczos approximation, g = 7 with 9 coefficients. The partial-fraction
// form is valid for complex arguments on the right half plane.
constexpr double kLanczosG = 7.0;
constexpr double kLanczosCoef[9] = {
    0.99999999999980993227684700473478,
    676.520368121885098567009190444019,
    -1259.13921672240287047156078755283,
    771.3234287776530788486528258894,
    -176.61502916214059906584551354,
    12.507343278686904814458936853,
    -0.13857109526572011689554707,
    9.984369578019570859563e-6,
    1.50563273514931155834e-7};

Complex log_gamma_right(Complex z) {
  Complex zm1 = z - 1.0;
  Complex sum = kLanczosCoef[0];
  for (int i = 1; i < 9; ++i) sum += kLanczosCoef[i] / (zm1 + double(i));
  Complex t = zm1 + kLanczosG + 0.5;
  return kHalfLogTwoPi + (zm1 + 0.5) * std::log(t) - t + std::log(sum);
}

}  // namespace

Complex log_gamma(Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError("log_gamma: argument must be finite");
  }
  long long n = std::llround(z.real());
  if (n <= 0 && std::abs(z - Complex(double(n), 0.0)) <= kPoleTol) {
    throw PoleError("log_gamma: z within 1e-12 of a nonpositive integer");
  }
  if (z.real() >= 0.5) return log_gamma_right(z);
  // Reflection: log Gamma(z) = log pi - log sin(pi z) - log Gamma(1-z).
  Complex v = std::log(Complex(kPi, 0.0)) - std::log(std::sin(kPi * z)) -
              log_gamma_right(1.0 - z);
  if (z.imag() == 0.0) {
    // Gamma of a real argument is real; fold the accumulated branch
    // multiples of 2*pi back to the principal value {0, pi}.
    double im = std::remainder(v.imag(), 2.0 * kPi);
    if (im < -kPi * (1.0 - 1e-9)) im += 2.0 * kPi;
    v = Complex(v.real(), im);
  }
  return v;
}

Complex pochhammer_gen(Complex x, double step, int k) {
  if (!(step > 0.0)) throw DomainError("pochhammer_gen: step > 0 violated");
  if (k < 0) throw DomainError("pochhammer_gen: k >= 0 violated");
  if (k == 0) return Complex(1.0, 0.0);
  return std::exp(log_gamma(x + step * double(k)) - log_gamma(x));
}

HSeries::HSeries(const ParameterSet& params) {
  params.validate();
  real_ = params.is_real();
  log_gamma_beta_ = log_gamma(params.beta_p);
  const Complex lg_rho = log_gamma(params.rho_p);
  const Complex lg_delta = log_gamma(params.delta_p);
  log_coef_.resize(params.trunc_i + 1);
  log_coef_[0] = Complex(0.0, 0.0);
  for (int k = 1; k <= params.trunc_i; ++k) {
    double kk = double(k);
    log_coef_[k] = log_gamma_beta_ +
                   (log_gamma(params.rho_p + params.q_step * kk) - lg_rho) -
                   (log_gamma(params.delta_p + params.p_step * kk) - lg_delta) -
                   log_gamma(params.gamma_p * kk + params.beta_p);
  }
}

Complex HSeries::h(Complex z) const {
  if (z == Complex(0.0, 0.0)) return Complex(1.0, 0.0);
  if (real_ && z.imag() == 0.0) return Complex(h_real(z.real()), 0.0);
  const Complex logz = std::log(z);
  detail::KahanSum<Complex> acc;
  acc.add(Complex(1.0, 0.0));
  for (size_t k = 1; k < log_coef_.size(); ++k) {
    Complex e = log_coef_[k] + double(k) * logz;
    if (e.real() > kOverflowLog) {
      throw OverflowError("truncated series: term exceeds double range");
    }
    acc.add(std::exp(e));
  }
  return acc.value();
}

double HSeries::h_real(double z) const {
  if (!real_) {
    throw DomainError("real series evaluation requires a real parameter set");
  }
  if (z == 0.0) return 1.0;
  const double log_abs_z = std::log(std::abs(z));
  detail::KahanSum<double> acc;
  acc.add(1.0);
  double sign = 1.0;
  for (size_t k = 1; k < log_coef_.size(); ++k) {
    if (z < 0.0) sign = (k % 2 == 0) ? 1.0 : -1.0;
    double e = log_coef_[k].real() + double(k) * log_abs_z;
    if (e > kOverflowLog) {
      throw OverflowError("truncated series: term exceeds double range");
    }
    acc.add(sign * std::exp(e));
  }
  return acc.value();
}

Complex HSeries::ml(Complex z) const {
  if (z == Complex(0.0, 0.0)) return std::exp(-log_gamma_beta_);
  const Complex logz = std::log(z);
  detail::KahanSum<Complex> acc;
  for (size_t k = 0; k < log_coef_.size(); ++k) {
    Complex e = log_coef_[k] - log_gamma_beta_ + double(k) * logz;
    if (e.real() > kOverflowLog) {
      throw OverflowError("truncated series: term exceeds double range");
    }
    acc.add(std::exp(e));
  }
  return acc.value();
}

Complex HSeries::ml_term(int k, Complex z) const {
  if (k < 0 || k >= static_cast<int>(log_coef_.size())) {
    throw DomainError("ml_term: k out of range");
  }
  if (k == 0) return std::exp(-log_gamma_beta_);
  if (z == Complex(0.0, 0.0)) return Complex(0.0, 0.0);
  return std::exp(log_coef_[k] - log_gamma_beta_ + double(k) * std::log(z));
}

Complex truncated_ml(const ParameterSet& params, Complex z) {
  return HSeries(params).ml(z);
}

Complex truncated_h(const ParameterSet& params, Complex z) {
  return HSeries(params).h(z);
}

double truncated_h_real(const ParameterSet& params, double z) {
  return HSeries(params).h_real(z);
}

Complex coefficient_c(const ParameterSet& params) {
  params.validate();
  Complex e = log_gamma(params.beta_p) +
              (log_gamma(params.rho_p + params.q_step) - log_gamma(params.rho_p)) -
              log_gamma(params.gamma_p + params.beta_p) -
              (log_gamma(params.delta_p + params.p_step) - log_gamma(params.delta_p));
  return std::exp(e);
}

double coefficient_c_real(const ParameterSet& params) {
  Complex c = coefficient_c(params);
  if (std::abs(c.imag()) > 1e-10 * std::abs(c.real())) {
    throw DomainError(
        "coefficient C has a nonnegligible imaginary part; "
        "use the complex interface");
  }
  return c.real();
}

}  // namespace vfrac
