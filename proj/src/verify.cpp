#include "vfrac/verify.hpp"

#include <sys/wait.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "vfrac/errors.hpp"
#include "vfrac/limit.hpp"
#include "vfrac/maps.hpp"
#include "vfrac/multivariable.hpp"
#include "vfrac/parameters.hpp"
#include "vfrac/quadrature.hpp"
#include "vfrac/scalar_calculus.hpp"
#include "vfrac/special_functions.hpp"
#include "vfrac/vector_field.hpp"

namespace vfrac {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Residual normalized the way the contracts state bounds: |diff| <= tol*(1+|scale|).
double nres(double diff, double scale) {
  return std::abs(diff) / (1.0 + std::abs(scale));
}

void add_check(std::vector<VerifyRecord>& out, const std::string& name,
               double tolerance, const std::function<double()>& body) {
  VerifyRecord rec;
  rec.name = name;
  rec.tolerance = tolerance;
  try {
    rec.residual = body();
    rec.pass = rec.residual <= tolerance;
  } catch (const Error& e) {
    rec.name = name + " [" + e.kind() + "]";
    rec.residual = kInf;
    rec.pass = false;
  }
  out.push_back(std::move(rec));
}

struct ScalarFn {
  ScalarMap f;
  ScalarMap fprime;
};

std::vector<ScalarFn> scalar_corpus() {
  return {
      {[](double t) { return t * t; }, [](double t) { return 2.0 * t; }},
      {[](double t) { return t * t * t + 2.0 * t; },
       [](double t) { return 3.0 * t * t + 2.0; }},
      {[](double t) { return std::sin(t); },
       [](double t) { return std::cos(t); }},
      {[](double t) { return std::exp(t); },
       [](double t) { return std::exp(t); }},
      {[](double t) { return std::log(t); },
       [](double t) { return 1.0 / t; }},
  };
}

std::vector<ParameterSet> param_draws(double alpha, int trunc_i = 0) {
  std::vector<ParameterSet> out = {
      ParameterSet::unit(alpha),
      ParameterSet::real(1.5, 2.0, 1.2, 0.8, 1.0, 1.3, 3, alpha),
      ParameterSet::real(0.7, 1.1, 2.0, 1.5, 2.0, 1.0, 4, alpha),
  };
  if (trunc_i > 0) {
    for (ParameterSet& p : out) p = p.with_trunc(trunc_i);
  }
  return out;
}

VectorMap scalar_field_2d(Field2D f) {
  VectorMap m;
  m.input_dim = 2;
  m.output_dim = 1;
  m.eval = [f = std::move(f)](const std::vector<double>& x) {
    return std::vector<double>{f(x[0], x[1])};
  };
  return m;
}

VectorMap scalar_map_1d(ScalarMap f) {
  VectorMap m;
  m.input_dim = 1;
  m.output_dim = 1;
  m.eval = [f = std::move(f)](const std::vector<double>& x) {
    return std::vector<double>{f(x[0])};
  };
  return m;
}

Matrix right_scaled(const Matrix& j, const Point& a, const ParameterSet& ps) {
  const double c = coefficient_c_real(ps);
  Matrix out = j;
  for (int i = 0; i < out.rows; ++i) {
    for (int p = 0; p < out.cols; ++p) {
      out.at(i, p) *= c * std::pow(a[size_t(p)], 1.0 - ps.alpha);
    }
  }
  return out;
}

// ---- series checks -------------------------------------------------------

double check_h_at_zero() {
  double worst = 0.0;
  for (const ParameterSet& ps : param_draws(0.5)) {
    worst = std::max(worst, std::abs(truncated_h(ps, Complex(0.0, 0.0)) -
                                     Complex(1.0, 0.0)));
  }
  ParameterSet cx = ParameterSet::unit(0.5);
  cx.gamma_p = {1.3, 0.4};
  cx.beta_p = {2.0, -0.3};
  worst = std::max(
      worst, std::abs(truncated_h(cx, Complex(0.0, 0.0)) - Complex(1.0, 0.0)));
  return worst;
}

double check_truncation_step() {
  const ParameterSet base = ParameterSet::real(1.5, 2.0, 1.2, 0.8, 1.0, 1.3, 1, 0.5);
  double worst = 0.0;
  for (double z : {0.0, 0.3, 1.0, 3.7}) {
    for (int n = 0; n <= 8; ++n) {
      const Complex lo = truncated_ml(base.with_trunc(n), Complex(z, 0.0));
      const Complex hi = truncated_ml(base.with_trunc(n + 1), Complex(z, 0.0));
      const Complex term =
          HSeries(base.with_trunc(n + 1)).ml_term(n + 1, Complex(z, 0.0));
      worst = std::max(worst, std::abs((hi - lo) - term) / std::abs(hi));
    }
  }
  return worst;
}

double check_pochhammer_zero() {
  double worst = 0.0;
  for (double x : {0.3, 1.0, 4.2}) {
    for (double s : {0.5, 1.0, 2.0}) {
      worst = std::max(worst, std::abs(pochhammer_gen(Complex(x, 0.0), s, 0) -
                                       Complex(1.0, 0.0)));
    }
  }
  worst = std::max(worst, std::abs(pochhammer_gen(Complex(2.0, 1.5), 1.0, 0) -
                                   Complex(1.0, 0.0)));
  return worst;
}

double check_no_overflow_window() {
  int failures = 0;
  const std::vector<Complex> zs = {{-10.0, 0.0}, {10.0, 0.0}, {0.0, 10.0},
                                   {7.0, -7.0},  {0.1, 0.0}};
  for (double g : {0.5, 5.0}) {
    for (double b : {0.5, 5.0}) {
      for (double r : {0.5, 5.0}) {
        for (double d : {0.5, 5.0}) {
          const ParameterSet ps = ParameterSet::real(g, b, r, d, 1.0, 1.0, 50, 0.5);
          for (const Complex& z : zs) {
            const Complex v = truncated_h(ps, z);
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) ++failures;
          }
        }
      }
    }
  }
  ParameterSet cx = ParameterSet::real(2.0, 1.5, 3.0, 1.0, 2.0, 1.5, 50, 0.5);
  cx.gamma_p = {2.0, 0.7};
  cx.rho_p = {3.0, -0.4};
  for (const Complex& z : zs) {
    const Complex v = truncated_h(cx, z);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) ++failures;
  }
  return double(failures);
}

double check_linear_coefficient() {
  double worst = 0.0;
  for (const ParameterSet& ps : param_draws(0.5)) {
    const HSeries series(ps);
    auto quotient = [&](double eps) { return (series.h_real(eps) - 1.0) / eps; };
    LimitConfig cfg;
    const double slope = detail::richardson_limit(quotient, cfg).value;
    const double c = coefficient_c_real(ps);
    worst = std::max(worst, nres(slope - c, c));
  }
  return worst;
}

// ---- quadrature checks ---------------------------------------------------

double check_quad_additivity() {
  const QuadratureConfig cfg;
  const std::vector<ScalarMap> gs = {
      [](double x) { return std::sin(x); },
      [](double x) { return std::exp(x); },
      [](double x) { return x * x; },
  };
  double worst = 0.0;
  for (const ScalarMap& g : gs) {
    const double whole = integrate_adaptive(g, Interval{0.0, 2.0}, cfg);
    const double left = integrate_adaptive(g, Interval{0.0, 0.7}, cfg);
    const double right = integrate_adaptive(g, Interval{0.7, 2.0}, cfg);
    worst = std::max(worst, std::abs(whole - (left + right)));
  }
  return worst;
}

double check_quad_substitution() {
  const QuadratureConfig cfg;
  const std::vector<ScalarMap> fs = {
      [](double) { return 1.0; },
      [](double x) { return x; },
      [](double x) { return std::sin(x); },
  };
  double worst = 0.0;
  for (const ScalarMap& f : fs) {
    for (double alpha : {0.3, 0.7}) {
      const double weighted =
          integrate_weighted(f, Interval{0.5, 2.0}, alpha, cfg);
      auto direct_integrand = [&](double x) {
        return f(x) * std::pow(x, alpha - 1.0);
      };
      const double direct =
          integrate_adaptive(direct_integrand, Interval{0.5, 2.0}, cfg);
      const double bound =
          std::max(cfg.abs_tol, cfg.rel_tol * std::abs(direct));
      worst = std::max(worst, std::abs(weighted - direct) / bound);
    }
  }
  return worst;
}

double check_quad_linearity() {
  const QuadratureConfig cfg;
  ScalarMap f = [](double x) { return std::sin(x); };
  ScalarMap g = [](double x) { return std::exp(x); };
  ScalarMap combo = [](double x) { return 2.0 * std::sin(x) - 3.0 * std::exp(x); };
  const Interval iv{0.0, 1.0};
  const double lhs = integrate_adaptive(combo, iv, cfg);
  const double rhs = 2.0 * integrate_adaptive(f, iv, cfg) -
                     3.0 * integrate_adaptive(g, iv, cfg);
  return std::abs(lhs - rhs);
}

// ---- scalar operator checks ----------------------------------------------

double check_scalar_limit_vs_closed() {
  const LimitConfig cfg;
  double worst = 0.0;
  for (const ScalarFn& fn : scalar_corpus()) {
    for (double t : {0.5, 1.0, 2.0}) {
      for (double alpha : {0.25, 0.5, 0.75, 1.0}) {
        for (const ParameterSet& ps : param_draws(alpha)) {
          const double lim = v_derivative_limit(fn.f, t, ps, cfg).value;
          const double closed = v_derivative_closed(fn.fprime, t, ps);
          worst = std::max(worst, nres(lim - closed, closed));
        }
      }
    }
  }
  return worst;
}

double check_scalar_linearity() {
  const LimitConfig cfg;
  const ParameterSet ps = ParameterSet::real(1.5, 2.0, 1.2, 0.8, 1.0, 1.3, 3, 0.6);
  ScalarMap f = [](double t) { return std::sin(t); };
  ScalarMap g = [](double t) { return t * t; };
  ScalarMap combo = [](double t) { return 2.0 * std::sin(t) - 3.0 * t * t; };
  double worst = 0.0;
  for (double t : {0.5, 1.0, 2.0}) {
    const double lhs = v_derivative_limit(combo, t, ps, cfg).value;
    const double rhs = 2.0 * v_derivative_limit(f, t, ps, cfg).value -
                       3.0 * v_derivative_limit(g, t, ps, cfg).value;
    worst = std::max(worst, nres(lhs - rhs, rhs));
  }
  return worst;
}

double check_scalar_product_rule() {
  const LimitConfig cfg;
  const ParameterSet ps = ParameterSet::real(0.7, 1.1, 2.0, 1.5, 2.0, 1.0, 4, 0.4);
  ScalarMap f = [](double t) { return std::exp(t); };
  ScalarMap g = [](double t) { return std::sin(t) + 2.0; };
  ScalarMap prod = [](double t) { return std::exp(t) * (std::sin(t) + 2.0); };
  double worst = 0.0;
  for (double t : {0.5, 1.0, 2.0}) {
    const double lhs = v_derivative_limit(prod, t, ps, cfg).value;
    const double rhs = f(t) * v_derivative_limit(g, t, ps, cfg).value +
                       g(t) * v_derivative_limit(f, t, ps, cfg).value;
    worst = std::max(worst, nres(lhs - rhs, rhs));
  }
  return worst;
}

double check_scalar_quotient_rule() {
  const LimitConfig cfg;
  const ParameterSet ps = ParameterSet::unit(0.5);
  ScalarMap f = [](double t) { return std::log(t) + 3.0; };
  ScalarMap g = [](double t) { return 2.0 + std::sin(t); };
  ScalarMap quot = [](double t) {
    return (std::log(t) + 3.0) / (2.0 + std::sin(t));
  };
  double worst = 0.0;
  for (double t : {0.5, 1.0, 2.0}) {
    const double lhs = v_derivative_limit(quot, t, ps, cfg).value;
    const double df = v_derivative_limit(f, t, ps, cfg).value;
    const double dg = v_derivative_limit(g, t, ps, cfg).value;
    const double rhs = (g(t) * df - f(t) * dg) / (g(t) * g(t));
    worst = std::max(worst, nres(lhs - rhs, rhs));
  }
  return worst;
}

double check_scalar_constant() {
  const LimitConfig cfg;
  ScalarMap f = [](double) { return 4.75; };
  double worst = 0.0;
  for (const ParameterSet& ps : param_draws(0.5)) {
    for (double t : {0.5, 1.0, 2.0}) {
      worst = std::max(worst, std::abs(v_derivative_limit(f, t, ps, cfg).value));
    }
  }
  return worst;
}

double check_truncation_independence() {
  const LimitConfig cfg;
  ScalarMap f = [](double t) { return std::exp(t); };
  const ParameterSet base = ParameterSet::real(1.5, 2.0, 1.2, 0.8, 1.0, 1.3, 1, 0.5);
  const double ref = v_derivative_limit(f, 1.3, base.with_trunc(1), cfg).value;
  double worst = 0.0;
  for (int i : {2, 5, 20}) {
    const double v = v_derivative_limit(f, 1.3, base.with_trunc(i), cfg).value;
    worst = std::max(worst, nres(v - ref, ref));
  }
  return worst;
}

double check_conformable_reduction() {
  const LimitConfig cfg;
  double worst = 0.0;
  for (const ScalarFn& fn : scalar_corpus()) {
    for (double alpha : {0.25, 0.75}) {
      const ParameterSet ps = ParameterSet::unit(alpha, 1);
      for (double t : {0.5, 2.0}) {
        const double lim = v_derivative_limit(fn.f, t, ps, cfg).value;
        const double conf = std::pow(t, 1.0 - alpha) * fn.fprime(t);
        worst = std::max(worst, nres(lim - conf, conf));
      }
    }
  }
  return worst;
}

double check_alpha_one_reduction() {
  const ParameterSet ps = ParameterSet::unit(1.0);
  double worst = 0.0;
  for (const ScalarFn& fn : scalar_corpus()) {
    for (double t : {0.5, 1.0, 2.0}) {
      const double closed = v_derivative_closed(fn.fprime, t, ps);
      worst = std::max(worst, nres(closed - fn.fprime(t), fn.fprime(t)));
    }
  }
  return worst;
}

// ---- multivariable checks --------------------------------------------------

std::vector<std::pair<VectorMap, Point>> jacobian_corpus() {
  VectorMap sin_x = scalar_field_2d([](double x, double) { return std::sin(x); });
  VectorMap ident;
  ident.input_dim = 2;
  ident.output_dim = 2;
  ident.eval = [](const std::vector<double>& x) { return x; };
  VectorMap pair_map;
  pair_map.input_dim = 2;
  pair_map.output_dim = 2;
  pair_map.eval = [](const std::vector<double>& x) {
    return std::vector<double>{x[0] * x[1], x[0] + x[1]};
  };
  VectorMap triple;
  triple.input_dim = 3;
  triple.output_dim = 3;
  triple.eval = [](const std::vector<double>& x) {
    return std::vector<double>{x[0] * x[0] * x[1], x[1] * x[2] * x[2],
                               x[0] + x[1] + x[2]};
  };
  return {{sin_x, {1.3, 0.8}},
          {ident, {1.0, 1.0}},
          {pair_map, {1.0, 2.0}},
          {triple, {1.0, 1.5, 0.8}}};
}

double check_jacobian_factorization() {
  const LimitConfig cfg;
  double worst = 0.0;
  for (double alpha : {0.5, 0.8}) {
    const ParameterSet ps = ParameterSet::real(1.5, 2.0, 1.2, 0.8, 1.0, 1.3, 3, alpha);
    for (const auto& [map, a] : jacobian_corpus()) {
      const VJacobian vj = v_jacobian(map, a, ps, cfg);
      const Matrix factored = right_scaled(classical_jacobian_fd(map, a), a, ps);
      for (int i = 0; i < vj.entries.rows; ++i) {
        for (int p = 0; p < vj.entries.cols; ++p) {
          worst = std::max(worst, nres(vj.entries.at(i, p) - factored.at(i, p),
                                       vj.entries.at(i, p)));
        }
      }
    }
  }
  return worst;
}

VectorMap decay_probe_map() {
  VectorMap f;
  f.input_dim = 2;
  f.output_dim = 2;
  f.eval = [](const std::vector<double>& x) {
    return std::vector<double>{x[0] * x[1], x[0] + x[1] * x[1]};
  };
  return f;
}

std::vector<double> decay_residuals(const Matrix& candidate) {
  const VectorMap f = decay_probe_map();
  const Point a = {1.0, 1.5};
  const ParameterSet ps = ParameterSet::unit(0.5);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  std::vector<double> out;
  for (int k = 3; k <= 7; ++k) {
    const double mag = std::pow(10.0, -k);
    const std::vector<double> eps = {mag * inv_sqrt2, mag * inv_sqrt2};
    out.push_back(linear_map_residual(f, a, candidate, ps, eps));
  }
  return out;
}

double check_residual_decay_slope() {
  const LimitConfig cfg;
  const Matrix jac =
      v_jacobian(decay_probe_map(), {1.0, 1.5}, ParameterSet::unit(0.5), cfg)
          .entries;
  const std::vector<double> res = decay_residuals(jac);
  // Least-squares slope of log10(residual) against log10(|eps|) = -k.
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  const int n = int(res.size());
  for (int i = 0; i < n; ++i) {
    const double x = -double(i + 3);
    const double y = std::log10(res[size_t(i)]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  return 0.9 - slope;  // pass when the fitted slope is at least 0.9
}

double check_uniqueness_floor() {
  const LimitConfig cfg;
  Matrix jac =
      v_jacobian(decay_probe_map(), {1.0, 1.5}, ParameterSet::unit(0.5), cfg)
          .entries;
  // Rank-one bump aligned with the probe direction; Frobenius norm 1e-3.
  Matrix bump(2, 2);
  bump.at(0, 0) = bump.at(0, 1) = bump.at(1, 0) = bump.at(1, 1) = 0.5e-3;
  const double bump_norm = bump.frobenius();
  Matrix perturbed = jac;
  for (size_t i = 0; i < perturbed.a.size(); ++i) perturbed.a[i] += bump.a[i];
  const std::vector<double> res = decay_residuals(perturbed);
  const double tail = *std::min_element(res.end() - 2, res.end());
  return bump_norm / 2.0 - tail;  // pass when the residual stays above ||E||/2
}

double check_multi_linearity_product() {
  const LimitConfig cfg;
  const ParameterSet ps = ParameterSet::real(0.7, 1.1, 2.0, 1.5, 2.0, 1.0, 4, 0.6);
  const Point a = {1.0, 2.0};
  Field2D f = [](double x, double y) { return std::sin(x) * y; };
  Field2D g = [](double x, double y) { return x * x + y; };
  Field2D combo = [&](double x, double y) { return 2.0 * f(x, y) - 3.0 * g(x, y); };
  Field2D prod = [&](double x, double y) { return f(x, y) * g(x, y); };
  const VJacobian jf = v_jacobian(scalar_field_2d(f), a, ps, cfg);
  const VJacobian jg = v_jacobian(scalar_field_2d(g), a, ps, cfg);
  const VJacobian jc = v_jacobian(scalar_field_2d(combo), a, ps, cfg);
  const VJacobian jp = v_jacobian(scalar_field_2d(prod), a, ps, cfg);
  const double fa = f(a[0], a[1]), ga = g(a[0], a[1]);
  double worst = 0.0;
  for (int p = 0; p < 2; ++p) {
    const double lin_rhs = 2.0 * jf.entries.at(0, p) - 3.0 * jg.entries.at(0, p);
    worst = std::max(worst, nres(jc.entries.at(0, p) - lin_rhs, lin_rhs));
    const double prod_rhs = fa * jg.entries.at(0, p) + ga * jf.entries.at(0, p);
    worst = std::max(worst, nres(jp.entries.at(0, p) - prod_rhs, prod_rhs));
  }
  return worst;
}

double check_multi_scalar_consistency() {
  const LimitConfig cfg;
  const ParameterSet ps = ParameterSet::real(1.5, 2.0, 1.2, 0.8, 1.0, 1.3, 3, 0.5);
  ScalarMap f = [](double t) { return std::exp(t); };
  const double via_partial = v_partial(scalar_map_1d(f), {1.3}, 1, ps, cfg);
  const double via_scalar = v_derivative_limit(f, 1.3, ps, cfg).value;
  return std::abs(via_partial - via_scalar);
}

double check_componentwise() {
  const LimitConfig cfg;
  const ParameterSet ps = ParameterSet::unit(0.5);
  double worst = 0.0;
  for (const auto& [map, a] : jacobian_corpus()) {
    worst = std::max(worst, componentwise_check(map, a, ps, cfg));
  }
  return worst;
}

double check_chain_rule_agreement() {
  const LimitConfig cfg;
  const ParameterSet ps = ParameterSet::unit(0.5);
  // n = m = p = 1: the matrix path must agree with the scalar composition.
  ScalarMap g_inner = [](double t) { return t * t + 1.0; };
  ScalarMap f_outer_prime = [](double u) { return std::cos(u); };
  VectorMap inner_map = scalar_map_1d(g_inner);
  VectorMap outer_map = scalar_map_1d([](double u) { return std::sin(u); });
  const Matrix m = chain_rule_multi(outer_map, inner_map, {1.2}, ps, cfg);
  const double scalar = chain_rule(f_outer_prime, g_inner, 1.2, ps, cfg).value;
  return nres(m.at(0, 0) - scalar, scalar);
}

// ---- mixed partials and the Green identity ---------------------------------

LimitConfig mixed_limit_config() {
  LimitConfig cfg;
  cfg.eps_base = 1e-2;  // the nested outer quotient divides inner noise by eps
  return cfg;
}

struct MixedFn {
  Field2D f;
  Field2D f_ts;  // classical mixed second partial
};

std::vector<MixedFn> mixed_corpus() {
  return {
      {[](double t, double s) { return t * t * s * s * s; },
       [](double t, double s) { return 6.0 * t * s * s; }},
      {[](double t, double s) { return std::exp(0.5 * (t + s)); },
       [](double t, double s) { return 0.25 * std::exp(0.5 * (t + s)); }},
      {[](double t, double s) { return std::sin(t) * std::cos(s); },
       [](double t, double s) { return -std::cos(t) * std::sin(s); }},
  };
}

double check_mixed_limit_vs_closed() {
  const LimitConfig cfg = mixed_limit_config();
  const ParameterSet ps = ParameterSet::unit(0.5);
  double worst = 0.0;
  for (const MixedFn& fn : mixed_corpus()) {
    for (double t : {0.5, 1.0, 2.0}) {
      for (double s : {0.5, 1.0, 2.0}) {
        for (double alpha : {0.3, 0.7, 1.0}) {
          for (double kappa : {0.3, 0.7, 1.0}) {
            const MixedOrders orders{alpha, kappa};
            const double lim = mixed_partial_limit(fn.f, t, s, orders, ps, cfg);
            const double closed = mixed_partial_closed(fn.f_ts, t, s, orders, ps);
            worst = std::max(worst, nres(lim - closed, closed));
          }
        }
      }
    }
  }
  return worst;
}

double check_mixed_commutation() {
  const LimitConfig cfg = mixed_limit_config();
  const ParameterSet ps = ParameterSet::unit(0.5);
  double worst = 0.0;
  for (const MixedFn& fn : mixed_corpus()) {
    for (double t : {0.5, 2.0}) {
      for (double s : {1.0, 2.0}) {
        for (double alpha : {0.3, 1.0}) {
          for (double kappa : {0.7, 1.0}) {
            const MixedOrders orders{alpha, kappa};
            const double gap = commutativity_check(fn.f, t, s, orders, ps, cfg);
            const double scale = mixed_partial_closed(fn.f_ts, t, s, orders, ps);
            worst = std::max(worst, nres(gap, scale));
          }
        }
      }
    }
  }
  return worst;
}

struct GreenCase {
  Field2D f;
  Field2D g;
  Region2D region;
  double alpha;
};

std::vector<GreenCase> green_corpus() {
  return {
      {[](double x, double y) { return x * y; },
       [](double x, double y) { return x * x + 0.0 * y; },
       Region2D{Interval{1.0, 2.0}, Interval{1.0, 3.0}}, 0.5},
      {[](double, double) { return 0.0; },
       [](double x, double) { return x; },
       Region2D{Interval{1.0, 2.0}, Interval{1.0, 2.0}}, 0.5},
      {[](double, double y) { return y; },
       [](double, double) { return 0.0; },
       Region2D{Interval{1.0, 2.0}, Interval{1.0, 2.0}}, 0.25},
      {[](double x, double y) { return std::exp(0.5 * (x + y)); },
       [](double x, double y) { return std::exp(0.3 * x + 0.7 * y); },
       Region2D{Interval{0.5, 1.5}, Interval{1.0, 2.0}}, 0.75},
      {[](double x, double y) { return x * y; },
       [](double x, double y) { return x * x * y; },
       Region2D{Interval{1.0, 2.0}, Interval{1.0, 3.0}}, 1.0},
      {[](double x, double y) { return x * x * y * y; },
       [](double x, double y) { return x * x * x * y; },
       Region2D{Interval{2.0, 3.0}, Interval{1.0, 2.0}}, 0.25},
  };
}

double check_green_residual() {
  const QuadratureConfig cfg;
  double worst = 0.0;
  for (const GreenCase& gc : green_corpus()) {
    const ParameterSet ps = ParameterSet::unit(gc.alpha);
    const double lhs = green_lhs(gc.f, gc.g, gc.region, ps, cfg);
    const double gap = green_check(gc.f, gc.g, gc.region, ps, cfg);
    worst = std::max(worst, nres(gap, lhs));
  }
  return worst;
}

double check_green_forms_agree() {
  const QuadratureConfig cfg;
  const GreenCase gc = green_corpus()[0];
  const ParameterSet ps = ParameterSet::unit(gc.alpha);
  const double reduced = green_lhs(gc.f, gc.g, gc.region, ps, cfg);
  const double direct = green_lhs_direct(gc.f, gc.g, gc.region, ps, cfg);
  return nres(reduced - direct, reduced);
}

double check_green_additivity() {
  const QuadratureConfig cfg;
  const GreenCase gc = green_corpus()[0];
  const ParameterSet ps = ParameterSet::unit(gc.alpha);
  const double xm = 0.5 * (gc.region.x_iv.lo + gc.region.x_iv.hi);
  const Region2D left{Interval{gc.region.x_iv.lo, xm}, gc.region.y_iv};
  const Region2D right{Interval{xm, gc.region.x_iv.hi}, gc.region.y_iv};
  const double lhs_whole = green_lhs(gc.f, gc.g, gc.region, ps, cfg);
  const double lhs_split = green_lhs(gc.f, gc.g, left, ps, cfg) +
                           green_lhs(gc.f, gc.g, right, ps, cfg);
  const double rhs_whole =
      green_rhs(gc.f, gc.g, Curve2D::rectangle_boundary(gc.region), ps, cfg);
  const double rhs_split =
      green_rhs(gc.f, gc.g, Curve2D::rectangle_boundary(left), ps, cfg) +
      green_rhs(gc.f, gc.g, Curve2D::rectangle_boundary(right), ps, cfg);
  return std::max(std::abs(lhs_whole - lhs_split),
                  std::abs(rhs_whole - rhs_split));
}

double check_green_orientation() {
  const QuadratureConfig cfg;
  const GreenCase gc = green_corpus()[0];
  const ParameterSet ps = ParameterSet::unit(gc.alpha);
  const Curve2D curve = Curve2D::rectangle_boundary(gc.region);
  const double fwd = green_rhs(gc.f, gc.g, curve, ps, cfg);
  const double rev = green_rhs(gc.f, gc.g, curve.reversed(), ps, cfg);
  return std::abs(fwd + rev);
}

// ---- command-line tool checks (subprocess) ---------------------------------

struct CmdResult {
  int exit_code = -1;
  std::string out;
};

std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') {
      out += "'\\''";
    } else {
      out += c;
    }
  }
  out += "'";
  return out;
}

CmdResult run_cmd(const std::string& exe, const std::string& args) {
  const std::string full = shell_quote(exe) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(full.c_str(), "r");
  CmdResult res;
  if (pipe == nullptr) return res;
  char buf[4096];
  size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, n);
  const int status = pclose(pipe);
  if (WIFEXITED(status)) res.exit_code = WEXITSTATUS(status);
  return res;
}

// Reserializes NDJSON with the wall-time field removed, so two runs compare
// equal exactly when everything else is bit-identical.
std::string canonical_without_walltime(const std::string& text, bool* ok) {
  std::ostringstream out;
  std::istringstream in(text);
  std::string line;
  *ok = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded()) {
      *ok = false;
      return text;
    }
    j.erase("wall_ms");
    out << j.dump() << "\n";
  }
  return out.str();
}

double check_cli_determinism(const std::string& exe) {
  const std::string args = "deriv --f poly:0,0,1 --t 1 --alpha 0.5";
  const CmdResult a = run_cmd(exe, args);
  const CmdResult b = run_cmd(exe, args);
  if (a.exit_code != 0 || b.exit_code != 0) return kInf;
  bool ok_a = false, ok_b = false;
  const std::string ca = canonical_without_walltime(a.out, &ok_a);
  const std::string cb = canonical_without_walltime(b.out, &ok_b);
  if (!ok_a || !ok_b) return kInf;
  return ca == cb ? 0.0 : 1.0;
}

double check_cli_exit_codes(const std::string& exe) {
  int mismatches = 0;
  if (run_cmd(exe, "deriv --f poly:0,0,1 --t 1 --alpha 0.5").exit_code != 0)
    ++mismatches;
  if (run_cmd(exe, "deriv --f poly:0,0,1 --t 0 --alpha 0.5").exit_code != 1)
    ++mismatches;
  if (run_cmd(exe, "deriv --f poly:0,0,1 --t 1 --alpha 1.5").exit_code != 2)
    ++mismatches;
  if (run_cmd(exe, "no-such-subcommand").exit_code != 2) ++mismatches;
  return double(mismatches);
}

double check_cli_round_trip(const std::string& exe) {
  const CmdResult d = run_cmd(exe, "deriv --f poly:0,0,1 --t 1 --alpha 0.5");
  const CmdResult m = run_cmd(exe, "eval-ml --z 0 --beta 2");
  if (d.exit_code != 0 || m.exit_code != 0) return kInf;
  auto first_value = [](const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
      if (j.is_discarded() || !j.contains("value")) return kInf;
      return j["value"].get<double>();
    }
    return kInf;
  };
  const double deriv_value = first_value(d.out);
  const double ml_value = first_value(m.out);
  return std::max(nres(deriv_value - 2.0, 2.0), nres(ml_value - 1.0, 1.0));
}

}  // namespace

std::vector<VerifyRecord> run_verify_suite(const std::string& self_exe) {
  std::vector<VerifyRecord> out;

  add_check(out, "series.h_at_zero_exact", 0.0, check_h_at_zero);
  add_check(out, "series.truncation_step", 1e-14, check_truncation_step);
  add_check(out, "series.pochhammer_zero_exact", 0.0, check_pochhammer_zero);
  add_check(out, "series.no_overflow_window", 0.0, check_no_overflow_window);
  add_check(out, "series.linear_coefficient", 1e-8, check_linear_coefficient);

  add_check(out, "quadrature.additivity", 2e-10, check_quad_additivity);
  add_check(out, "quadrature.weighted_substitution", 5.0, check_quad_substitution);
  add_check(out, "quadrature.linearity", 1e-9, check_quad_linearity);

  add_check(out, "scalar.limit_vs_closed", 1e-6, check_scalar_limit_vs_closed);
  add_check(out, "scalar.linearity", 1e-6, check_scalar_linearity);
  add_check(out, "scalar.product_rule", 1e-6, check_scalar_product_rule);
  add_check(out, "scalar.quotient_rule", 1e-6, check_scalar_quotient_rule);
  add_check(out, "scalar.constant_maps_to_zero", 1e-10, check_scalar_constant);
  add_check(out, "scalar.truncation_independence", 1e-8,
            check_truncation_independence);
  add_check(out, "scalar.conformable_reduction", 1e-8,
            check_conformable_reduction);
  add_check(out, "scalar.alpha_one_reduction", 1e-12, check_alpha_one_reduction);

  add_check(out, "jacobian.factorization", 1e-6, check_jacobian_factorization);
  add_check(out, "jacobian.residual_decay_slope_margin", 0.0,
            check_residual_decay_slope);
  add_check(out, "jacobian.uniqueness_floor_margin", 0.0,
            check_uniqueness_floor);
  add_check(out, "jacobian.linearity_product", 1e-6,
            check_multi_linearity_product);
  add_check(out, "jacobian.scalar_consistency", 1e-12,
            check_multi_scalar_consistency);
  add_check(out, "jacobian.componentwise", 1e-8, check_componentwise);
  add_check(out, "jacobian.chain_rule_scalar_agreement", 1e-8,
            check_chain_rule_agreement);

  add_check(out, "mixed.limit_vs_closed", 1e-4, check_mixed_limit_vs_closed);
  add_check(out, "mixed.commutation", 1e-4, check_mixed_commutation);

  add_check(out, "green.residual", 1e-6, check_green_residual);
  add_check(out, "green.lhs_forms_agree", 1e-8, check_green_forms_agree);
  add_check(out, "green.additivity_split", 1e-6, check_green_additivity);
  add_check(out, "green.orientation_antisymmetry", 1e-10,
            check_green_orientation);

  if (!self_exe.empty()) {
    add_check(out, "cli.json_determinism", 0.0,
              [&] { return check_cli_determinism(self_exe); });
    add_check(out, "cli.exit_codes", 0.0,
              [&] { return check_cli_exit_codes(self_exe); });
    add_check(out, "cli.round_trip", 1e-6,
              [&] { return check_cli_round_trip(self_exe); });
  }

  return out;
}

}  // namespace vfrac
