#include "vfrac/vector_field.hpp"

#include <algorithm>
#include <cmath>

#include "vfrac/errors.hpp"
#include "vfrac/special_functions.hpp"

namespace vfrac {

namespace {

constexpr double kClosureTol = 1e-10;

double finite_or_throw(double v, const char* op) {
  if (!std::isfinite(v)) {
    throw DomainError(std::string(op) + ": field value is not finite");
  }
  return v;
}

// Classical partials by the library-wide 4th-order stencil with relative step.
double partial_x_fd(const Field2D& f, double x, double y) {
  const double h = std::max(std::abs(x), 1.0) * 1e-6;
  return (-f(x + 2.0 * h, y) + 8.0 * f(x + h, y) - 8.0 * f(x - h, y) +
          f(x - 2.0 * h, y)) /
         (12.0 * h);
}

double partial_y_fd(const Field2D& f, double x, double y) {
  const double h = std::max(std::abs(y), 1.0) * 1e-6;
  return (-f(x, y + 2.0 * h) + 8.0 * f(x, y + h) - 8.0 * f(x, y - h) +
          f(x, y - 2.0 * h)) /
         (12.0 * h);
}

}  // namespace

void MixedOrders::validate() const {
  if (!std::isfinite(alpha) || !(alpha > 0.0) || alpha > 1.0) {
    throw UsageError("alpha in (0,1] violated");
  }
  if (!std::isfinite(kappa) || !(kappa > 0.0) || kappa > 1.0) {
    throw UsageError("kappa in (0,1] violated");
  }
}

void Region2D::validate() const {
  if (!std::isfinite(x_iv.lo) || !std::isfinite(x_iv.hi) ||
      !std::isfinite(y_iv.lo) || !std::isfinite(y_iv.hi) ||
      !(x_iv.lo < x_iv.hi) || !(y_iv.lo < y_iv.hi)) {
    throw DomainError("region intervals require finite lo < hi");
  }
  if (!(x_iv.lo > 0.0) || !(y_iv.lo > 0.0)) {
    throw DomainError("region must lie in the open positive quadrant");
  }
}

Curve2D Curve2D::rectangle_boundary(const Region2D& region) {
  region.validate();
  const double x0 = region.x_iv.lo, x1 = region.x_iv.hi;
  const double y0 = region.y_iv.lo, y1 = region.y_iv.hi;
  const double w = x1 - x0, h = y1 - y0;
  Curve2D curve;
  curve.counterclockwise = true;
  curve.segments = {
      {[=](double t) { return x0 + t * w; }, [=](double) { return y0; },
       [=](double) { return w; }, [=](double) { return 0.0; }, 0.0, 1.0},
      {[=](double) { return x1; }, [=](double t) { return y0 + t * h; },
       [=](double) { return 0.0; }, [=](double) { return h; }, 0.0, 1.0},
      {[=](double t) { return x1 - t * w; }, [=](double) { return y1; },
       [=](double) { return -w; }, [=](double) { return 0.0; }, 0.0, 1.0},
      {[=](double) { return x0; }, [=](double t) { return y1 - t * h; },
       [=](double) { return 0.0; }, [=](double) { return -h; }, 0.0, 1.0},
  };
  return curve;
}

Curve2D Curve2D::reversed() const {
  Curve2D out;
  out.counterclockwise = !counterclockwise;
  out.segments.reserve(segments.size());
  for (auto it = segments.rbegin(); it != segments.rend(); ++it) {
    const CurveSegment seg = *it;
    const double t0 = seg.t0, t1 = seg.t1;
    CurveSegment rev;
    rev.t0 = t0;
    rev.t1 = t1;
    rev.x = [seg, t0, t1](double t) { return seg.x(t0 + t1 - t); };
    rev.y = [seg, t0, t1](double t) { return seg.y(t0 + t1 - t); };
    rev.dx = [seg, t0, t1](double t) { return -seg.dx(t0 + t1 - t); };
    rev.dy = [seg, t0, t1](double t) { return -seg.dy(t0 + t1 - t); };
    out.segments.push_back(std::move(rev));
  }
  return out;
}

void Curve2D::check_closed() const {
  if (segments.empty()) {
    throw OpenCurve("curve has no segments");
  }
  for (size_t i = 0; i < segments.size(); ++i) {
    const CurveSegment& cur = segments[i];
    const CurveSegment& nxt = segments[(i + 1) % segments.size()];
    const double gx = cur.x(cur.t1) - nxt.x(nxt.t0);
    const double gy = cur.y(cur.t1) - nxt.y(nxt.t0);
    if (std::hypot(gx, gy) > kClosureTol) {
      throw OpenCurve("curve endpoint mismatch exceeds 1e-10");
    }
  }
}

double mixed_partial_limit(const Field2D& f, double t, double s,
                           const MixedOrders& orders,
                           const ParameterSet& params, const LimitConfig& cfg) {
  params.validate();
  cfg.validate();
  orders.validate();
  if (!(t > 0.0) || !(s > 0.0)) {
    throw DomainError("mixed_partial_limit: (t, s) must be strictly positive");
  }
  if (params.trunc_i < 1) {
    throw DomainError(
        "mixed_partial_limit: trunc_i >= 1 required for derivative operators");
  }
  if (!params.is_real()) {
    throw DomainError(
        "mixed_partial_limit: limit evaluation requires a real parameter set");
  }
  // H's coefficients do not involve the order, so one series serves both axes.
  const HSeries series(params);
  const LimitConfig inner_cfg = cfg.deeper(2);
  const double s_pow = std::pow(s, -orders.kappa);
  auto inner = [&](double t_val) {
    const double f0 = finite_or_throw(f(t_val, s), "mixed_partial_limit");
    auto quotient = [&](double eps) {
      const double s_moved = s * series.h_real(eps * s_pow);
      if (!(s_moved > 0.0)) {
        throw DomainError("mixed_partial_limit: probe left the positive axis");
      }
      return (finite_or_throw(f(t_val, s_moved), "mixed_partial_limit") - f0) /
             eps;
    };
    return detail::richardson_limit(quotient, inner_cfg).value;
  };
  const double inner_at_t = inner(t);
  const double t_pow = std::pow(t, -orders.alpha);
  auto outer = [&](double eps) {
    const double t_moved = t * series.h_real(eps * t_pow);
    if (!(t_moved > 0.0)) {
      throw DomainError("mixed_partial_limit: probe left the positive axis");
    }
    return (inner(t_moved) - inner_at_t) / eps;
  };
  return detail::richardson_limit(outer, cfg).value;
}

double mixed_partial_closed(const Field2D& f_ts, double t, double s,
                            const MixedOrders& orders,
                            const ParameterSet& params) {
  params.validate();
  orders.validate();
  if (!(t > 0.0) || !(s > 0.0)) {
    throw DomainError("mixed_partial_closed: (t, s) must be strictly positive");
  }
  const double c = coefficient_c_real(params);
  return c * c * std::pow(s, 1.0 - orders.kappa) *
         std::pow(t, 1.0 - orders.alpha) *
         finite_or_throw(f_ts(t, s), "mixed_partial_closed");
}

double commutativity_check(const Field2D& f, double t, double s,
                           const MixedOrders& orders,
                           const ParameterSet& params, const LimitConfig& cfg) {
  const double a_side = mixed_partial_limit(f, t, s, orders, params, cfg);
  Field2D swapped = [&f](double u, double v) { return f(v, u); };
  const MixedOrders swapped_orders{orders.kappa, orders.alpha};
  const double b_side =
      mixed_partial_limit(swapped, s, t, swapped_orders, params, cfg);
  return std::abs(a_side - b_side);
}

double green_lhs(const Field2D& f, const Field2D& g, const Region2D& region,
                 const ParameterSet& params, const QuadratureConfig& cfg) {
  params.validate();
  region.validate();
  cfg.validate();
  const double c = coefficient_c_real(params);
  const double am1 = params.alpha - 1.0;
  Field2D integrand = [&](double x, double y) {
    return (partial_x_fd(g, x, y) * std::pow(y, am1) -
            partial_y_fd(f, x, y) * std::pow(x, am1)) /
           c;
  };
  return double_integral_rect(integrand, Rect{region.x_iv, region.y_iv}, cfg);
}

double green_lhs_direct(const Field2D& f, const Field2D& g,
                        const Region2D& region, const ParameterSet& params,
                        const QuadratureConfig& cfg) {
  params.validate();
  region.validate();
  cfg.validate();
  const double c = coefficient_c_real(params);
  const double am1 = params.alpha - 1.0;
  Field2D integrand = [&](double x, double y) {
    const double dg_x = c * std::pow(x, -am1) * partial_x_fd(g, x, y);
    const double df_y = c * std::pow(y, -am1) * partial_y_fd(f, x, y);
    return (dg_x - df_y) / (c * c) * std::pow(x, am1) * std::pow(y, am1);
  };
  return double_integral_rect(integrand, Rect{region.x_iv, region.y_iv}, cfg);
}

double green_rhs(const Field2D& f, const Field2D& g, const Curve2D& curve,
                 const ParameterSet& params, const QuadratureConfig& cfg) {
  params.validate();
  cfg.validate();
  curve.check_closed();
  const double c = coefficient_c_real(params);
  const double am1 = params.alpha - 1.0;
  double total = 0.0;
  for (const CurveSegment& seg : curve.segments) {
    auto integrand = [&](double tau) {
      const double x = seg.x(tau), y = seg.y(tau);
      if (!(x > 0.0) || !(y > 0.0)) {
        throw DomainError("green_rhs: curve leaves the positive quadrant");
      }
      return (finite_or_throw(f(x, y), "green_rhs") * std::pow(x, am1) *
                  seg.dx(tau) +
              finite_or_throw(g(x, y), "green_rhs") * std::pow(y, am1) *
                  seg.dy(tau)) /
             c;
    };
    total += integrate_adaptive(integrand, Interval{seg.t0, seg.t1}, cfg);
  }
  return total;
}

double green_check(const Field2D& f, const Field2D& g, const Region2D& region,
                   const ParameterSet& params, const QuadratureConfig& cfg) {
  const double lhs = green_lhs(f, g, region, params, cfg);
  const double rhs =
      green_rhs(f, g, Curve2D::rectangle_boundary(region), params, cfg);
  return std::abs(lhs - rhs);
}

}  // namespace vfrac
