#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>

#include "support/oracles.hpp"
#include "vfrac/errors.hpp"
#include "vfrac/limit.hpp"
#include "vfrac/parameters.hpp"
#include "vfrac/special_functions.hpp"

using namespace vfrac;
using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

ParameterSet draw1(double alpha = 0.5, int trunc = 2) {
  return ParameterSet::real(1.5, 2.0, 1.2, 0.8, 1.0, 1.3, trunc, alpha);
}

ParameterSet complex_draw() {
  ParameterSet ps;
  ps.gamma_p = {1.0, 0.5};
  ps.beta_p = {2.0, -0.3};
  ps.rho_p = {1.5, 0.0};
  ps.delta_p = {1.0, 1.0};
  ps.p_step = 1.2;
  ps.q_step = 0.8;
  ps.trunc_i = 2;
  ps.alpha = 0.5;
  return ps;
}

}  // namespace

TEST_CASE("log_gamma matches the real oracle grid", "[special]") {
  for (const auto& row : test::kLogGammaOracle) {
    const Complex got = log_gamma(Complex(row[0], 0.0));
    REQUIRE_THAT(got.real(), WithinRel(row[1], 1e-12));
    REQUIRE(got.imag() == 0.0);
  }
}

TEST_CASE("log_gamma known values", "[special]") {
  REQUIRE_THAT(log_gamma(Complex(1.0, 0.0)).real(), WithinAbs(0.0, 1e-14));
  REQUIRE_THAT(log_gamma(Complex(5.0, 0.0)).real(),
               WithinRel(std::log(24.0), 1e-14));
  REQUIRE_THAT(log_gamma(Complex(0.5, 0.0)).real(),
               WithinRel(0.5 * std::log(M_PI), 1e-14));
}

TEST_CASE("log_gamma matches the complex oracle", "[special]") {
  for (const auto& row : test::kLogGammaComplexOracle) {
    const Complex got = log_gamma(Complex(row[0], row[1]));
    const Complex want(row[2], row[3]);
    REQUIRE(std::abs(got - want) <= 1e-12 * (1.0 + std::abs(want)));
  }
}

TEST_CASE("log_gamma rejects poles and non-finite input", "[special]") {
  REQUIRE_THROWS_AS(log_gamma(Complex(0.0, 0.0)), PoleError);
  REQUIRE_THROWS_AS(log_gamma(Complex(-3.0, 0.0)), PoleError);
  REQUIRE_THROWS_AS(log_gamma(Complex(-7.0 + 1e-13, 0.0)), PoleError);
  REQUIRE_THROWS_AS(log_gamma(Complex(std::nan(""), 0.0)), DomainError);
  // Just off the pole is fine.
  REQUIRE(std::isfinite(log_gamma(Complex(-3.0 + 1e-6, 0.0)).real()));
}

TEST_CASE("pochhammer_gen basics", "[special]") {
  // k = 0 collapses to Gamma(x)/Gamma(x), returned as exact 1.
  REQUIRE(pochhammer_gen(Complex(2.3, 0.0), 0.7, 0) == Complex(1.0, 0.0));
  REQUIRE(pochhammer_gen(Complex(0.4, 1.1), 2.0, 0) == Complex(1.0, 0.0));
  // (1)_3 = Gamma(4)/Gamma(1) = 3!
  REQUIRE_THAT(pochhammer_gen(Complex(1.0, 0.0), 1.0, 3).real(),
               WithinRel(6.0, 1e-13));
  // Gamma(1.5)/Gamma(0.5) = 1/2 by the recurrence.
  REQUIRE_THAT(pochhammer_gen(Complex(0.5, 0.0), 0.5, 2).real(),
               WithinRel(0.5, 1e-13));
  REQUIRE_THROWS_AS(pochhammer_gen(Complex(1.0, 0.0), 0.0, 1), DomainError);
  REQUIRE_THROWS_AS(pochhammer_gen(Complex(1.0, 0.0), 1.0, -1), DomainError);
}

TEST_CASE("truncated_ml small closed sums", "[special]") {
  // Only the k = 0 term survives at trunc 0: 1/Gamma(beta).
  ParameterSet p0 = ParameterSet::real(1, 3, 1, 1, 1, 1, 0, 0.5);
  REQUIRE_THAT(truncated_ml(p0, Complex(7.7, 0.0)).real(),
               WithinRel(0.5, 1e-14));
  // Unit parameters, trunc 1: 1/Gamma(1) + z/Gamma(2) = 1 + z.
  ParameterSet p1 = ParameterSet::unit(0.5, 1);
  REQUIRE_THAT(truncated_ml(p1, Complex(0.25, 0.0)).real(),
               WithinRel(1.25, 1e-14));
  // z = 0 kills every k >= 1 term.
  REQUIRE_THAT(truncated_ml(draw1(), Complex(0.0, 0.0)).real(),
               WithinRel(1.0 / std::tgamma(2.0), 1e-14));
}

TEST_CASE("truncated_ml matches the frozen oracle rows", "[special]") {
  for (const auto& r : test::kTruncMlOracle) {
    ParameterSet ps = ParameterSet::real(r[0], r[1], r[2], r[3], r[4], r[5],
                                         static_cast<int>(r[6]), 0.5);
    const Complex got = truncated_ml(ps, Complex(r[7], 0.0));
    REQUIRE_THAT(got.real(), WithinRel(r[8], 1e-12));
    // Negative z raised to integer powers leaves roundoff in the imaginary
    // part, proportional to the largest term of the sum.
    REQUIRE_THAT(got.imag(), WithinAbs(0.0, 1e-12 * (1.0 + std::abs(r[8]))));
  }
}

TEST_CASE("truncated_h is exactly 1 at z = 0", "[special]") {
  REQUIRE(truncated_h(ParameterSet::unit(), Complex(0.0, 0.0)) ==
          Complex(1.0, 0.0));
  REQUIRE(truncated_h(draw1(), Complex(0.0, 0.0)) == Complex(1.0, 0.0));
  REQUIRE(truncated_h(complex_draw(), Complex(0.0, 0.0)) == Complex(1.0, 0.0));
  REQUIRE(truncated_h_real(draw1(), 0.0) == 1.0);
}

TEST_CASE("truncated_h closed sums", "[special]") {
  ParameterSet p1 = ParameterSet::unit(0.5, 1);
  for (double z : {0.3, -0.2, 1.7}) {
    REQUIRE_THAT(truncated_h_real(p1, z), WithinRel(1.0 + z, 1e-14));
  }
  // Unit parameters give the truncated exponential.
  ParameterSet p3 = ParameterSet::unit(0.5, 3);
  const double want = 1.0 + 0.1 + 0.01 / 2.0 + 0.001 / 6.0;
  REQUIRE_THAT(truncated_h_real(p3, 0.1), WithinRel(want, 1e-14));
}

TEST_CASE("raising the truncation index adds exactly one term", "[special]") {
  const ParameterSet base = draw1(0.5, 1);
  for (double z : {0.0, 0.3, 1.0, 3.7}) {
    for (int n = 0; n <= 8; ++n) {
      const Complex lo = truncated_ml(base.with_trunc(n), Complex(z, 0.0));
      const Complex hi = truncated_ml(base.with_trunc(n + 1), Complex(z, 0.0));
      const Complex term =
          HSeries(base.with_trunc(n + 1)).ml_term(n + 1, Complex(z, 0.0));
      REQUIRE(std::abs((hi - lo) - term) <= 1e-14 * std::abs(hi));
    }
  }
}

TEST_CASE("log-space evaluation survives the moderate-parameter window",
          "[special]") {
  // Real parts in [0.5, 5], |z| <= 10, trunc 50: no overflow, finite values.
  for (double g : {0.5, 2.0, 5.0}) {
    for (double b : {0.5, 5.0}) {
      ParameterSet ps = ParameterSet::real(g, b, 1.3, 1.3, 1.0, 1.0, 50, 0.5);
      for (double z : {-10.0, 10.0}) {
        const Complex v = truncated_ml(ps, Complex(z, 0.0));
        REQUIRE(std::isfinite(v.real()));
        REQUIRE(std::isfinite(v.imag()));
      }
    }
  }
}

TEST_CASE("a term beyond double range raises OverflowError", "[special]") {
  REQUIRE_THROWS_AS(truncated_ml(ParameterSet::unit(), Complex(1e300, 0.0)),
                    OverflowError);
}

TEST_CASE("coefficient C closed values", "[special]") {
  REQUIRE_THAT(coefficient_c_real(ParameterSet::unit()),
               WithinRel(1.0, 1e-13));
  // rho = delta and p = q cancel the Pochhammer factors: Gamma(2)/Gamma(3).
  ParameterSet half = ParameterSet::real(1.0, 2.0, 1.1, 1.1, 0.9, 0.9, 2, 0.5);
  REQUIRE_THAT(coefficient_c_real(half), WithinRel(0.5, 1e-13));
  REQUIRE_THAT(coefficient_c_real(draw1()),
               WithinRel(test::kCoefCDraw1, 1e-12));
  ParameterSet d2 = ParameterSet::real(0.7, 1.3, 2.0, 1.5, 2.0, 0.9, 2, 0.5);
  REQUIRE_THAT(coefficient_c_real(d2), WithinRel(test::kCoefCDraw2, 1e-12));
  const Complex cc = coefficient_c(complex_draw());
  const Complex want(test::kCoefCComplexRe, test::kCoefCComplexIm);
  REQUIRE(std::abs(cc - want) <= 1e-12 * std::abs(want));
  // The real wrapper refuses a materially complex C.
  REQUIRE_THROWS_AS(coefficient_c_real(complex_draw()), DomainError);
}

TEST_CASE("coefficient C is the linear coefficient of H", "[special]") {
  for (ParameterSet ps : {ParameterSet::unit(), draw1()}) {
    const HSeries series(ps);
    const double c = coefficient_c_real(ps);
    const LimitResult r = detail::richardson_limit(
        [&series](double eps) { return (series.h_real(eps) - 1.0) / eps; },
        LimitConfig{});
    REQUIRE(std::abs(r.value - c) <= 1e-8 * (1.0 + std::abs(c)));
  }
}

TEST_CASE("HSeries real fast path agrees with the complex path", "[special]") {
  const ParameterSet ps = draw1(0.5, 6);
  const HSeries series(ps);
  REQUIRE(series.real_coeffs());
  REQUIRE(series.trunc_i() == 6);
  for (double z : {-2.0, -0.3, 0.0, 0.4, 2.5}) {
    REQUIRE_THAT(series.h_real(z),
                 WithinAbs(series.h(Complex(z, 0.0)).real(), 1e-14));
  }
  REQUIRE_THROWS_WITH(HSeries(complex_draw()).h_real(0.5),
                      ContainsSubstring("real parameter set"));
}

TEST_CASE("parameter validation names the violated constraint", "[special]") {
  auto bad = [](auto&& mutate) {
    ParameterSet ps = ParameterSet::unit();
    mutate(ps);
    return ps;
  };
  REQUIRE_THROWS_WITH(bad([](ParameterSet& p) { p.gamma_p = -1.0; }).validate(),
                      ContainsSubstring("Re(gamma) > 0 violated"));
  REQUIRE_THROWS_WITH(bad([](ParameterSet& p) { p.beta_p = 0.0; }).validate(),
                      ContainsSubstring("Re(beta) > 0 violated"));
  REQUIRE_THROWS_WITH(bad([](ParameterSet& p) { p.p_step = 0.0; }).validate(),
                      ContainsSubstring("p > 0 violated"));
  REQUIRE_THROWS_WITH(bad([](ParameterSet& p) { p.q_step = 3.0; }).validate(),
                      ContainsSubstring("Re(gamma)+p >= q violated"));
  REQUIRE_THROWS_WITH(bad([](ParameterSet& p) { p.alpha = 0.0; }).validate(),
                      ContainsSubstring("alpha in (0,1] violated"));
  REQUIRE_THROWS_WITH(bad([](ParameterSet& p) { p.alpha = 1.2; }).validate(),
                      ContainsSubstring("alpha in (0,1] violated"));
  REQUIRE_THROWS_WITH(bad([](ParameterSet& p) { p.trunc_i = -1; }).validate(),
                      ContainsSubstring("trunc_i >= 0 violated"));
  REQUIRE_THROWS_AS(
      bad([](ParameterSet& p) { p.rho_p = std::nan(""); }).validate(),
      UsageError);
  REQUIRE_NOTHROW(ParameterSet::unit().validate());
  REQUIRE_NOTHROW(complex_draw().validate());
}
