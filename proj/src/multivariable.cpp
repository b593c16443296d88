#include "vfrac/multivariable.hpp"

#include <algorithm>
#include <cmath>

#include "vfrac/errors.hpp"
#include "vfrac/special_functions.hpp"

namespace vfrac {

namespace {

void check_map_point(const VectorMap& f, const Point& a, const char* op) {
  if (f.input_dim <= 0 || f.output_dim <= 0 || !f.eval) {
    throw DomainError(std::string(op) + ": map has no evaluation rule");
  }
  if (int(a.size()) != f.input_dim) {
    throw DomainError(std::string(op) +
                      ": point dimension does not match the map");
  }
  for (double x : a) {
    if (!std::isfinite(x)) {
      throw DomainError(std::string(op) + ": point has a non-finite coordinate");
    }
  }
}

std::vector<double> eval_checked(const VectorMap& f, const Point& x,
                                 const char* op) {
  std::vector<double> y = f.eval(x);
  if (int(y.size()) != f.output_dim) {
    throw DomainError(std::string(op) + ": map returned the wrong dimension");
  }
  for (double v : y) {
    if (!std::isfinite(v)) {
      throw DomainError(std::string(op) + ": map value is not finite");
    }
  }
  return y;
}

}  // namespace

double v_partial(const VectorMap& f, const Point& a, int axis,
                 const ParameterSet& params, const LimitConfig& cfg) {
  params.validate();
  cfg.validate();
  check_map_point(f, a, "v_partial");
  if (f.output_dim != 1) {
    throw DomainError("v_partial: map must be scalar valued");
  }
  if (axis < 1 || axis > f.input_dim) {
    throw DomainError("v_partial: axis out of range");
  }
  const double base = a[size_t(axis - 1)];
  if (!(base > 0.0)) {
    throw DomainError(
        "v_partial: base coordinate on the perturbed axis must be positive");
  }
  if (params.trunc_i < 1) {
    throw DomainError(
        "v_partial: trunc_i >= 1 required for derivative operators");
  }
  if (!params.is_real()) {
    throw DomainError(
        "v_partial: limit evaluation requires a real parameter set");
  }
  const HSeries series(params);
  const double base_pow = std::pow(base, -params.alpha);
  const double f0 = eval_checked(f, a, "v_partial")[0];
  Point probe = a;
  auto quotient = [&](double eps) {
    const double moved = base * series.h_real(eps * base_pow);
    if (!(moved > 0.0)) {
      throw DomainError("v_partial: probe point left the positive axis");
    }
    probe[size_t(axis - 1)] = moved;
    return (eval_checked(f, probe, "v_partial")[0] - f0) / eps;
  };
  return detail::richardson_limit(quotient, cfg).value;
}

VJacobian v_jacobian(const VectorMap& f, const Point& a,
                     const ParameterSet& params, const LimitConfig& cfg) {
  params.validate();
  cfg.validate();
  check_map_point(f, a, "v_jacobian");
  for (double x : a) {
    if (!(x > 0.0)) {
      throw DomainError("v_jacobian: base point must be strictly positive");
    }
  }
  VJacobian out;
  out.entries = Matrix(f.output_dim, f.input_dim);
  out.base = a;
  out.params = params;
  for (int j = 0; j < f.output_dim; ++j) {
    VectorMap component;
    component.input_dim = f.input_dim;
    component.output_dim = 1;
    component.eval = [&f, j](const std::vector<double>& x) {
      return std::vector<double>{f.eval(x)[size_t(j)]};
    };
    for (int p = 1; p <= f.input_dim; ++p) {
      out.entries.at(j, p - 1) = v_partial(component, a, p, params, cfg);
    }
  }
  return out;
}

Matrix classical_jacobian_fd(const VectorMap& f, const Point& a) {
  check_map_point(f, a, "classical_jacobian_fd");
  Matrix out(f.output_dim, f.input_dim);
  for (int p = 0; p < f.input_dim; ++p) {
    const double h = std::max(std::abs(a[size_t(p)]), 1.0) * 1e-6;
    Point x = a;
    auto column = [&](double step) {
      x[size_t(p)] = a[size_t(p)] + step;
      return eval_checked(f, x, "classical_jacobian_fd");
    };
    const std::vector<double> fp2 = column(2.0 * h), fp1 = column(h);
    const std::vector<double> fm1 = column(-h), fm2 = column(-2.0 * h);
    for (int j = 0; j < f.output_dim; ++j) {
      out.at(j, p) = (-fp2[size_t(j)] + 8.0 * fp1[size_t(j)] -
                      8.0 * fm1[size_t(j)] + fm2[size_t(j)]) /
                     (12.0 * h);
    }
  }
  return out;
}

double linear_map_residual(const VectorMap& f, const Point& a, const Matrix& L,
                           const ParameterSet& params,
                           const std::vector<double>& eps_vec) {
  params.validate();
  check_map_point(f, a, "linear_map_residual");
  if (L.rows != f.output_dim || L.cols != f.input_dim) {
    throw DomainError("linear_map_residual: linear map has wrong dimensions");
  }
  if (int(eps_vec.size()) != f.input_dim) {
    throw DomainError("linear_map_residual: eps dimension does not match");
  }
  const double eps_norm = norm2(eps_vec);
  if (!(eps_norm > 0.0)) {
    throw DomainError("linear_map_residual: eps_vec must be nonzero");
  }
  if (!params.is_real()) {
    throw DomainError(
        "linear_map_residual: probe evaluation requires a real parameter set");
  }
  const HSeries series(params);
  Point probe = a;
  for (int p = 0; p < f.input_dim; ++p) {
    const double base = a[size_t(p)];
    if (!(base > 0.0)) {
      throw DomainError(
          "linear_map_residual: base point must be strictly positive");
    }
    probe[size_t(p)] =
        base * series.h_real(eps_vec[size_t(p)] * std::pow(base, -params.alpha));
    if (!(probe[size_t(p)] > 0.0)) {
      throw DomainError("linear_map_residual: probe left the positive orthant");
    }
  }
  const std::vector<double> moved = eval_checked(f, probe, "linear_map_residual");
  const std::vector<double> at_a = eval_checked(f, a, "linear_map_residual");
  const std::vector<double> lin = L * eps_vec;
  std::vector<double> r(size_t(f.output_dim));
  for (int j = 0; j < f.output_dim; ++j) {
    r[size_t(j)] = moved[size_t(j)] - at_a[size_t(j)] - lin[size_t(j)];
  }
  return norm2(r) / eps_norm;
}

Matrix chain_rule_multi(const VectorMap& g, const VectorMap& f, const Point& a,
                        const ParameterSet& params, const LimitConfig& cfg) {
  check_map_point(f, a, "chain_rule_multi");
  if (g.input_dim != f.output_dim) {
    throw DomainError("chain_rule_multi: dimensions do not compose");
  }
  const std::vector<double> fa = eval_checked(f, a, "chain_rule_multi");
  for (double v : fa) {
    if (!(v > 0.0)) {
      throw DomainError(
          "chain_rule_multi: every component of f(a) must be positive");
    }
  }
  const Matrix dg = classical_jacobian_fd(g, fa);
  const VJacobian jf = v_jacobian(f, a, params, cfg);
  return dg * jf.entries;
}

double componentwise_check(const VectorMap& f, const Point& a,
                           const ParameterSet& params, const LimitConfig& cfg) {
  const VJacobian full = v_jacobian(f, a, params, cfg);
  double worst = 0.0;
  for (int j = 0; j < f.output_dim; ++j) {
    VectorMap component;
    component.input_dim = f.input_dim;
    component.output_dim = 1;
    component.eval = [&f, j](const std::vector<double>& x) {
      return std::vector<double>{f.eval(x)[size_t(j)]};
    };
    const VJacobian row = v_jacobian(component, a, params, cfg);
    std::vector<double> diff(size_t(f.input_dim));
    for (int p = 0; p < f.input_dim; ++p) {
      diff[size_t(p)] = full.entries.at(j, p) - row.entries.at(0, p);
    }
    worst = std::max(worst, norm2(diff));
  }
  return worst;
}

std::vector<double> v_gradient(const VectorMap& f, const Point& a,
                               double alpha, double kappa,
                               const ParameterSet& params,
                               const LimitConfig& cfg) {
  check_map_point(f, a, "v_gradient");
  if (f.input_dim != 2 || f.output_dim != 1) {
    throw DomainError("v_gradient: map must take R^2 to R");
  }
  if (!(alpha > 0.0 && alpha <= 1.0) || !(kappa > 0.0 && kappa <= 1.0)) {
    throw DomainError("v_gradient: orders must lie in (0, 1]");
  }
  return {v_partial(f, a, 1, params.with_alpha(alpha), cfg),
          v_partial(f, a, 2, params.with_alpha(kappa), cfg)};
}

}  // namespace vfrac
