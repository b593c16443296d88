#pragma once

#include <functional>
#include <vector>

#include "vfrac/limit.hpp"
#include "vfrac/maps.hpp"
#include "vfrac/parameters.hpp"
#include "vfrac/quadrature.hpp"

namespace vfrac {

// Independent fractional orders for the two axes of a plane field.
struct MixedOrders {
  double alpha = 0.5;
  double kappa = 0.5;

  void validate() const;  // both orders must lie in (0, 1]
};

// Axis-aligned rectangle strictly inside the positive quadrant. The weights
// x^{alpha-1}, y^{alpha-1} and all derivative base points stay positive there.
struct Region2D {
  Interval x_iv;
  Interval y_iv;

  void validate() const;
};

// One smooth parametric piece tau -> (x(tau), y(tau)) on [t0, t1], with its
// componentwise derivative supplied alongside.
struct CurveSegment {
  std::function<double(double)> x;
  std::function<double(double)> y;
  std::function<double(double)> dx;
  std::function<double(double)> dy;
  double t0 = 0.0;
  double t1 = 1.0;
};

// Piecewise-smooth closed curve, traced once. Junction or wrap-around gaps
// larger than 1e-10 make the curve open and boundary integrals refuse to run.
struct Curve2D {
  std::vector<CurveSegment> segments;
  bool counterclockwise = true;

  // Counterclockwise boundary of a rectangle: bottom, right, top, left.
  static Curve2D rectangle_boundary(const Region2D& region);

  // Same trace in the opposite direction; line integrals negate.
  Curve2D reversed() const;

  void check_closed() const;  // throws OpenCurve on a gap
};

// Mixed second partial: inner order-kappa partial in the second argument,
// outer order-alpha partial in the first, both as extrapolated limits. The
// inner ladder runs two levels deeper than the outer one because the outer
// quotient differentiates an already-noisy inner value.
double mixed_partial_limit(const Field2D& f, double t, double s,
                           const MixedOrders& orders,
                           const ParameterSet& params, const LimitConfig& cfg);

// Closed form of the same quantity when the classical mixed second partial
// f_ts is known: C^2 * s^{1-kappa} * t^{1-alpha} * f_ts(t, s).
double mixed_partial_closed(const Field2D& f_ts, double t, double s,
                            const MixedOrders& orders,
                            const ParameterSet& params);

// |d^alpha_t d^kappa_s f - d^kappa_s d^alpha_t f|, both sides via
// mixed_partial_limit. Small on fields with continuous second partials.
double commutativity_check(const Field2D& f, double t, double s,
                           const MixedOrders& orders,
                           const ParameterSet& params, const LimitConfig& cfg);

// Area side of the weighted Green identity over a rectangle:
// the double integral of the alpha-partials of g (in x) and f (in y) against
// the measure (1/C)^2 x^{alpha-1} y^{alpha-1} dx dy. Partials enter in closed
// form, so the integrand reduces to (1/C)(g_x y^{alpha-1} - f_y x^{alpha-1});
// green_lhs integrates the reduced form, green_lhs_direct the literal product.
double green_lhs(const Field2D& f, const Field2D& g, const Region2D& region,
                 const ParameterSet& params, const QuadratureConfig& cfg);
double green_lhs_direct(const Field2D& f, const Field2D& g,
                        const Region2D& region, const ParameterSet& params,
                        const QuadratureConfig& cfg);

// Boundary side: sum over segments of
//   (1/C) Int [ f(x,y) x^{alpha-1} x'(tau) + g(x,y) y^{alpha-1} y'(tau) ] dtau.
// The curve must be closed and must stay in the open positive quadrant.
double green_rhs(const Field2D& f, const Field2D& g, const Curve2D& curve,
                 const ParameterSet& params, const QuadratureConfig& cfg);

// |green_lhs - green_rhs| over the counterclockwise rectangle boundary.
double green_check(const Field2D& f, const Field2D& g, const Region2D& region,
                   const ParameterSet& params, const QuadratureConfig& cfg);

}  // namespace vfrac
