#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "vfrac/errors.hpp"
#include "vfrac/special_functions.hpp"
#include "vfrac/vector_field.hpp"

using namespace vfrac;
using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

const QuadratureConfig kCfgQ{};

// Nested limits divide inner noise by the outer eps, so the outer ladder
// starts at 1e-2 rather than the scalar default.
LimitConfig mixed_cfg() {
  LimitConfig cfg;
  cfg.eps_base = 1e-2;
  return cfg;
}

}  // namespace

TEST_CASE("mixed partial limit on elementary fields", "[vector_field]") {
  const ParameterSet ps = ParameterSet::unit(0.5, 2);
  const MixedOrders half{0.5, 0.5};

  // Additively separable field: the inner partial is constant in t, so the
  // outer quotient sees only extrapolation noise from the inner limit.
  REQUIRE_THAT(mixed_partial_limit([](double t, double s) { return t + s; },
                                   1.0, 1.0, half, ps, mixed_cfg()),
               WithinAbs(0.0, 1e-6));

  const double c = coefficient_c_real(ps);
  REQUIRE_THAT(mixed_partial_limit([](double t, double s) { return t * s; },
                                   1.0, 1.0, half, ps, mixed_cfg()),
               WithinRel(c * c, 1e-4));

  // Exponential field at (1,1): closed value a^2 s^{1-k} t^{1-a} C^2 e^{a(t+s)}.
  const double a = 0.5;
  const double want = a * a * c * c * std::exp(a * 2.0);
  REQUIRE_THAT(
      mixed_partial_limit([a](double t, double s) { return std::exp(a * (t + s)); },
                          1.0, 1.0, half, ps, mixed_cfg()),
      WithinRel(want, 1e-4));
}

TEST_CASE("mixed partial closed form", "[vector_field]") {
  const ParameterSet ps = ParameterSet::unit(0.5, 2);
  const MixedOrders half{0.5, 0.5};
  REQUIRE(mixed_partial_closed([](double, double) { return 0.0; }, 1.0, 2.0,
                               half, ps) == 0.0);

  // f = t*s has unit mixed classical partial; at (4,9) the weights are 2 and 3.
  const double c = coefficient_c_real(ps);
  REQUIRE_THAT(mixed_partial_closed([](double, double) { return 1.0; }, 4.0,
                                    9.0, half, ps),
               WithinRel(c * c * 6.0, 1e-13));
  REQUIRE_THAT(mixed_partial_limit([](double t, double s) { return t * s; },
                                   4.0, 9.0, half, ps, mixed_cfg()),
               WithinRel(c * c * 6.0, 1e-4));

  const double a = 0.5;
  const MixedOrders mo{0.7, 0.4};
  const double t = 1.1, s = 0.8;
  const double want = c * c * std::pow(s, 1.0 - mo.kappa) *
                      std::pow(t, 1.0 - mo.alpha) * a * a *
                      std::exp(a * (t + s));
  REQUIRE_THAT(
      mixed_partial_closed(
          [a](double u, double v) { return a * a * std::exp(a * (u + v)); }, t,
          s, mo, ps),
      WithinRel(want, 1e-13));
}

TEST_CASE("limit and closed mixed partials agree on a sample grid",
          "[vector_field]") {
  const ParameterSet ps = ParameterSet::unit(0.5, 2);
  struct Case {
    Field2D f;
    Field2D f_ts;
  };
  const std::vector<Case> corpus = {
      {[](double t, double s) { return t * t * s * s * s; },
       [](double t, double s) { return 6.0 * t * s * s; }},
      {[](double t, double s) { return std::sin(t) * std::cos(s); },
       [](double t, double s) { return -std::cos(t) * std::sin(s); }},
  };
  for (const auto& c : corpus) {
    for (double t : {0.5, 2.0}) {
      for (double s : {1.0, 2.0}) {
        for (double alpha : {0.3, 1.0}) {
          const MixedOrders mo{alpha, 0.7};
          const double lim =
              mixed_partial_limit(c.f, t, s, mo, ps, mixed_cfg());
          const double closed = mixed_partial_closed(c.f_ts, t, s, mo, ps);
          REQUIRE(std::abs(lim - closed) <= 1e-4 * (1.0 + std::abs(closed)));
        }
      }
    }
  }
}

TEST_CASE("mixed partials commute", "[vector_field]") {
  const ParameterSet ps = ParameterSet::unit(0.5, 2);
  const MixedOrders half{0.5, 0.5};
  const Field2D esum = [](double t, double s) {
    return std::exp(0.5 * (t + s));
  };
  const double v = mixed_partial_limit(esum, 1.0, 1.0, half, ps, mixed_cfg());
  REQUIRE(commutativity_check(esum, 1.0, 1.0, half, ps, mixed_cfg()) <=
          1e-4 * (1.0 + std::abs(v)));

  REQUIRE(commutativity_check([](double t, double s) { return t + s; }, 1.0,
                              1.0, half, ps, mixed_cfg()) <= 1e-8);

  const Field2D poly = [](double t, double s) { return t * t * s * s * s; };
  const MixedOrders uneven{0.5, 0.5};
  const double vp = mixed_partial_limit(poly, 1.0, 2.0, uneven, ps, mixed_cfg());
  REQUIRE(commutativity_check(poly, 1.0, 2.0, uneven, ps, mixed_cfg()) <=
          1e-4 * (1.0 + std::abs(vp)));
}

TEST_CASE("mixed partial preconditions", "[vector_field]") {
  const ParameterSet ps = ParameterSet::unit(0.5, 2);
  const MixedOrders half{0.5, 0.5};
  REQUIRE_THROWS_WITH(
      mixed_partial_limit([](double t, double s) { return t * s; }, 0.0, 1.0,
                          half, ps, mixed_cfg()),
      ContainsSubstring("strictly positive"));
  REQUIRE_THROWS_WITH((MixedOrders{0.0, 0.5}.validate()),
                      ContainsSubstring("alpha in (0,1] violated"));
  REQUIRE_THROWS_WITH((MixedOrders{0.5, 1.2}.validate()),
                      ContainsSubstring("kappa in (0,1] violated"));
}

TEST_CASE("rectangle boundary geometry", "[vector_field]") {
  const Region2D region{{1.0, 2.0}, {1.0, 3.0}};
  REQUIRE_NOTHROW(region.validate());
  const Curve2D bd = Curve2D::rectangle_boundary(region);
  REQUIRE(bd.segments.size() == 4);
  REQUIRE(bd.counterclockwise);
  REQUIRE_NOTHROW(bd.check_closed());
  // Bottom edge starts at (x0, y0) and ends at (x1, y0).
  REQUIRE_THAT(bd.segments[0].x(bd.segments[0].t0), WithinAbs(1.0, 1e-15));
  REQUIRE_THAT(bd.segments[0].y(bd.segments[0].t0), WithinAbs(1.0, 1e-15));
  REQUIRE_THAT(bd.segments[0].x(bd.segments[0].t1), WithinAbs(2.0, 1e-15));
  REQUIRE_THAT(bd.segments[0].y(bd.segments[0].t1), WithinAbs(1.0, 1e-15));

  const Curve2D rev = bd.reversed();
  REQUIRE_FALSE(rev.counterclockwise);
  REQUIRE_NOTHROW(rev.check_closed());

  REQUIRE_THROWS_WITH((Region2D{{2.0, 1.0}, {1.0, 3.0}}.validate()),
                      ContainsSubstring("finite lo < hi"));
  REQUIRE_THROWS_WITH((Region2D{{0.0, 1.0}, {1.0, 3.0}}.validate()),
                      ContainsSubstring("open positive quadrant"));
}

TEST_CASE("open curves are rejected", "[vector_field]") {
  Curve2D open_curve;
  open_curve.segments.push_back(
      {[](double u) { return 1.0 + u; }, [](double) { return 1.0; },
       [](double) { return 1.0; }, [](double) { return 0.0; }, 0.0, 1.0});
  REQUIRE_THROWS_AS(open_curve.check_closed(), OpenCurve);
  REQUIRE_THROWS_WITH(green_rhs([](double, double) { return 0.0; },
                                [](double, double) { return 0.0; }, open_curve,
                                ParameterSet::unit(0.5, 2), kCfgQ),
                      ContainsSubstring("endpoint mismatch"));
}

TEST_CASE("boundary integral needs the positive quadrant", "[vector_field]") {
  // Circle of radius 1.5 about (1,1): closed, but dips below both axes.
  Curve2D circle;
  circle.segments.push_back({[](double u) { return 1.0 + 1.5 * std::cos(u); },
                             [](double u) { return 1.0 + 1.5 * std::sin(u); },
                             [](double u) { return -1.5 * std::sin(u); },
                             [](double u) { return 1.5 * std::cos(u); }, 0.0,
                             2.0 * M_PI});
  REQUIRE_NOTHROW(circle.check_closed());
  REQUIRE_THROWS_WITH(green_rhs([](double, double) { return 1.0; },
                                [](double, double) { return 1.0; }, circle,
                                ParameterSet::unit(0.5, 2), kCfgQ),
                      ContainsSubstring("positive quadrant"));
}

TEST_CASE("area integral closed values", "[vector_field]") {
  const ParameterSet ps = ParameterSet::unit(0.5, 2);
  const Region2D square{{1.0, 2.0}, {1.0, 2.0}};
  const Field2D zero = [](double, double) { return 0.0; };

  REQUIRE_THAT(green_lhs(zero, zero, square, ps, kCfgQ), WithinAbs(0.0, 1e-12));

  // g = x, f = 0: the integrand reduces to y^{-1/2}/C over the unit square.
  const double want = 2.0 * (std::sqrt(2.0) - 1.0) / coefficient_c_real(ps);
  REQUIRE_THAT(green_lhs(zero, [](double x, double) { return x; }, square, ps,
                         kCfgQ),
               WithinRel(want, 1e-9));
  REQUIRE_THAT(green_lhs([](double, double y) { return y; }, zero, square, ps,
                         kCfgQ),
               WithinRel(-want, 1e-9));
}

TEST_CASE("reduced and literal area integrands agree", "[vector_field]") {
  const Field2D f = [](double x, double y) { return x * y; };
  const Field2D g = [](double x, double) { return x * x; };
  const Region2D region{{1.0, 2.0}, {1.0, 3.0}};
  for (double alpha : {0.5, 0.8}) {
    const ParameterSet ps = ParameterSet::unit(alpha, 2);
    const double a = green_lhs(f, g, region, ps, kCfgQ);
    const double b = green_lhs_direct(f, g, region, ps, kCfgQ);
    REQUIRE(std::abs(a - b) <= 1e-8 * (1.0 + std::abs(a)));
  }
}

TEST_CASE("area and boundary sides agree", "[vector_field]") {
  struct Case {
    Field2D f, g;
    Region2D region;
    double alpha, tol;
  };
  const std::vector<Case> corpus = {
      {[](double x, double y) { return x * y; },
       [](double x, double) { return x * x; },
       {{1.0, 2.0}, {1.0, 3.0}},
       0.5,
       1e-6},
      {[](double, double) { return 0.0; }, [](double x, double) { return x; },
       {{1.0, 2.0}, {1.0, 2.0}},
       0.5,
       1e-6},
      {[](double x, double y) { return std::exp(x + y); },
       [](double x, double y) { return x * x * y; },
       {{0.5, 1.5}, {1.0, 2.0}},
       0.75,
       1e-6},
      {[](double x, double y) { return std::sin(x) * std::cos(y); },
       [](double x, double y) { return x * y; },
       {{1.0, 2.0}, {2.0, 3.0}},
       0.25,
       1e-6},
      // alpha = 1 is the classical Green identity.
      {[](double x, double y) { return x * y; },
       [](double x, double) { return x * x; },
       {{1.0, 2.0}, {1.0, 3.0}},
       1.0,
       1e-8},
  };
  for (const auto& c : corpus) {
    const ParameterSet ps = ParameterSet::unit(c.alpha, 2);
    const double lhs = green_lhs(c.f, c.g, c.region, ps, kCfgQ);
    REQUIRE(green_check(c.f, c.g, c.region, ps, kCfgQ) <=
            c.tol * (1.0 + std::abs(lhs)));
  }
}

TEST_CASE("area side is additive across a vertical split", "[vector_field]") {
  const Field2D f = [](double x, double y) { return x * y; };
  const Field2D g = [](double x, double) { return x * x; };
  const ParameterSet ps = ParameterSet::unit(0.5, 2);
  const Region2D whole{{1.0, 2.0}, {1.0, 3.0}};
  const Region2D left{{1.0, 1.5}, {1.0, 3.0}};
  const Region2D right{{1.5, 2.0}, {1.0, 3.0}};

  const double sum = green_lhs(f, g, left, ps, kCfgQ) +
                     green_lhs(f, g, right, ps, kCfgQ);
  REQUIRE_THAT(sum, WithinAbs(green_lhs(f, g, whole, ps, kCfgQ), 1e-6));

  // The shared edge cancels between the two boundary loops.
  const double rhs_sum =
      green_rhs(f, g, Curve2D::rectangle_boundary(left), ps, kCfgQ) +
      green_rhs(f, g, Curve2D::rectangle_boundary(right), ps, kCfgQ);
  REQUIRE_THAT(rhs_sum,
               WithinAbs(green_rhs(f, g, Curve2D::rectangle_boundary(whole),
                                   ps, kCfgQ),
                         1e-6));
}

TEST_CASE("boundary integral flips sign with orientation", "[vector_field]") {
  const Field2D f = [](double x, double y) { return x * y; };
  const Field2D g = [](double x, double) { return x * x; };
  const ParameterSet ps = ParameterSet::unit(0.5, 2);
  const Curve2D bd = Curve2D::rectangle_boundary({{1.0, 2.0}, {1.0, 2.0}});
  const double fwd = green_rhs(f, g, bd, ps, kCfgQ);
  const double rev = green_rhs(f, g, bd.reversed(), ps, kCfgQ);
  REQUIRE_THAT(fwd + rev, WithinAbs(0.0, 1e-10));
  REQUIRE(std::abs(fwd) > 0.1);  // the case is not trivially zero
}
