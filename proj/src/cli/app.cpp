#include "cli/app.hpp"

#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cli/registry.hpp"
#include "cli/report.hpp"
#include "vfrac/errors.hpp"
#include "vfrac/limit.hpp"
#include "vfrac/multivariable.hpp"
#include "vfrac/parameters.hpp"
#include "vfrac/quadrature.hpp"
#include "vfrac/scalar_calculus.hpp"
#include "vfrac/special_functions.hpp"
#include "vfrac/vector_field.hpp"
#include "vfrac/verify.hpp"

namespace vfrac::cli {

namespace {

using Clock = std::chrono::steady_clock;

// Flags shared by every subcommand: the parameter set, output format/sink.
struct Common {
  double gamma = 1.0, beta = 1.0, rho = 1.0, delta = 1.0;
  double p = 1.0, q = 1.0;
  int trunc = 2;
  double alpha = 0.5;
  std::string format = "json";
  std::string out_path;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--gamma", c.gamma, "series parameter gamma");
  sub->add_option("--beta", c.beta, "series parameter beta");
  sub->add_option("--rho", c.rho, "series parameter rho");
  sub->add_option("--delta", c.delta, "series parameter delta");
  sub->add_option("--p", c.p, "Pochhammer step p");
  sub->add_option("--q", c.q, "Pochhammer step q");
  sub->add_option("--trunc", c.trunc, "series truncation index");
  sub->add_option("--alpha", c.alpha, "derivative order alpha");
  sub->add_option("--format", c.format, "output format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--out", c.out_path, "write the report to this file");
}

ParameterSet to_params(const Common& c) {
  const ParameterSet ps = ParameterSet::real(c.gamma, c.beta, c.rho, c.delta,
                                             c.p, c.q, c.trunc, c.alpha);
  ps.validate();
  return ps;
}

std::string fmt_g(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

std::string param_echo(const Common& c) {
  return "alpha=" + fmt_g(c.alpha) + " gamma=" + fmt_g(c.gamma) +
         " beta=" + fmt_g(c.beta) + " rho=" + fmt_g(c.rho) +
         " delta=" + fmt_g(c.delta) + " p=" + fmt_g(c.p) +
         " q=" + fmt_g(c.q) + " trunc=" + std::to_string(c.trunc);
}

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

int emit_records(const Common& c, const std::vector<Record>& records,
                 int code) {
  if (!c.out_path.empty()) {
    std::ofstream f(c.out_path);
    if (!f) throw UsageError("cannot open output file '" + c.out_path + "'");
    emit(records, c.format, f);
  } else {
    emit(records, c.format, std::cout);
  }
  return code;
}

bool is_usage(const Error& e) { return std::string(e.kind()) == "UsageError"; }

std::vector<double> parse_csv_doubles(const std::string& s, size_t expected,
                                      const char* what) {
  std::vector<double> out;
  size_t start = 0;
  while (start <= s.size()) {
    const size_t pos = s.find(',', start);
    const std::string part =
        s.substr(start, pos == std::string::npos ? pos : pos - start);
    const char* begin = part.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0') {
      throw UsageError(std::string("invalid ") + what + " '" + s + "'");
    }
    out.push_back(v);
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  if (out.size() != expected) {
    throw UsageError(std::string("invalid ") + what + " '" + s + "': expected " +
                     std::to_string(expected) + " comma-separated reals");
  }
  return out;
}

std::string resolve_self(const char* argv0) {
  char buf[4096];
  const ssize_t n = readlink("/proc/self/exe", buf, sizeof buf - 1);
  if (n > 0) {
    buf[n] = '\0';
    return buf;
  }
  return argv0 != nullptr ? argv0 : "";
}

// ---- subcommand runners ----------------------------------------------------

int run_eval_ml(const Common& c, double z_re, double z_im) {
  const ParameterSet ps = to_params(c);
  const std::string inputs =
      "z=" + fmt_g(z_re) + " zim=" + fmt_g(z_im) + " " + param_echo(c);
  const auto start = Clock::now();
  std::vector<Record> recs(1);
  recs[0].str("op", "eval-ml").str("inputs", inputs);
  try {
    const Complex v = truncated_ml(ps, Complex(z_re, z_im));
    recs[0].num("value", v.real()).num("value_im", v.imag());
    recs[0].num("wall_ms", elapsed_ms(start));
    return emit_records(c, recs, 0);
  } catch (const Error& e) {
    if (is_usage(e)) throw;
    recs[0].str("error", e.kind()).num("wall_ms", elapsed_ms(start));
    return emit_records(c, recs, 1);
  }
}

int run_deriv(const Common& c, const std::string& fsel, double t) {
  const ParameterSet ps = to_params(c);
  const ScalarMap f = make_scalar(fsel);
  const std::string inputs = "f=" + fsel + " t=" + fmt_g(t) + " " + param_echo(c);
  const auto start = Clock::now();
  std::vector<Record> recs(1);
  recs[0].str("op", "deriv").str("inputs", inputs);
  try {
    const LimitResult r = v_derivative_limit(f, t, ps, LimitConfig{});
    recs[0].num("value", r.value).num("error_estimate", r.error_estimate);
    recs[0].num("wall_ms", elapsed_ms(start));
    return emit_records(c, recs, 0);
  } catch (const Error& e) {
    if (is_usage(e)) throw;
    recs[0].str("error", e.kind()).num("wall_ms", elapsed_ms(start));
    return emit_records(c, recs, 1);
  }
}

int run_integrate(const Common& c, const std::string& fsel, double a,
                  double t) {
  const ParameterSet ps = to_params(c);
  const ScalarMap f = make_scalar(fsel);
  const std::string inputs =
      "f=" + fsel + " a=" + fmt_g(a) + " t=" + fmt_g(t) + " " + param_echo(c);
  const auto start = Clock::now();
  std::vector<Record> recs(1);
  recs[0].str("op", "integrate").str("inputs", inputs);
  try {
    const double v = v_integral(f, a, t, ps, QuadratureConfig{});
    recs[0].num("value", v).num("wall_ms", elapsed_ms(start));
    return emit_records(c, recs, 0);
  } catch (const Error& e) {
    if (is_usage(e)) throw;
    recs[0].str("error", e.kind()).num("wall_ms", elapsed_ms(start));
    return emit_records(c, recs, 1);
  }
}

int run_partial(const Common& c, const std::string& fsel,
                const std::string& point_str, int axis) {
  const ParameterSet ps = to_params(c);
  const VectorMap f = make_vector_field({fsel});
  const std::vector<double> point = parse_csv_doubles(point_str, 2, "point");
  const std::string inputs = "f=" + fsel + " point=" + point_str +
                             " axis=" + std::to_string(axis) + " " +
                             param_echo(c);
  const auto start = Clock::now();
  std::vector<Record> recs(1);
  recs[0].str("op", "partial").str("inputs", inputs);
  try {
    const double v = v_partial(f, point, axis, ps, LimitConfig{});
    recs[0].num("value", v).num("wall_ms", elapsed_ms(start));
    return emit_records(c, recs, 0);
  } catch (const Error& e) {
    if (is_usage(e)) throw;
    recs[0].str("error", e.kind()).num("wall_ms", elapsed_ms(start));
    return emit_records(c, recs, 1);
  }
}

int run_jacobian(const Common& c, const std::vector<std::string>& fsels,
                 const std::string& point_str) {
  const ParameterSet ps = to_params(c);
  const VectorMap f = make_vector_field(fsels);
  const std::vector<double> point = parse_csv_doubles(point_str, 2, "point");
  std::string joined;
  for (const std::string& s : fsels) {
    if (!joined.empty()) joined += ";";
    joined += s;
  }
  const std::string inputs =
      "f=" + joined + " point=" + point_str + " " + param_echo(c);
  const auto start = Clock::now();
  try {
    const VJacobian vj = v_jacobian(f, point, ps, LimitConfig{});
    const double ms = elapsed_ms(start);
    std::vector<Record> recs;
    for (int i = 0; i < vj.entries.rows; ++i) {
      for (int j = 0; j < vj.entries.cols; ++j) {
        recs.emplace_back();
        recs.back()
            .str("op", "jacobian")
            .str("inputs", inputs)
            .integer("row", i)
            .integer("col", j)
            .num("value", vj.entries.at(i, j))
            .num("wall_ms", ms);
      }
    }
    return emit_records(c, recs, 0);
  } catch (const Error& e) {
    if (is_usage(e)) throw;
    std::vector<Record> recs(1);
    recs[0].str("op", "jacobian").str("inputs", inputs);
    recs[0].str("error", e.kind()).num("wall_ms", elapsed_ms(start));
    return emit_records(c, recs, 1);
  }
}

int run_mixed_check(const Common& c, const std::string& fsel, double t,
                    double s, double kappa, double tol) {
  const ParameterSet ps = to_params(c);
  const Field2D f = make_field(fsel);
  const std::string inputs = "f=" + fsel + " t=" + fmt_g(t) + " s=" + fmt_g(s) +
                             " kappa=" + fmt_g(kappa) + " " + param_echo(c);
  const auto start = Clock::now();
  std::vector<Record> recs(1);
  recs[0].str("op", "mixed-check").str("inputs", inputs);
  try {
    LimitConfig cfg;
    cfg.eps_base = 1e-2;  // the nested outer quotient divides inner noise
    const MixedOrders orders{c.alpha, kappa};
    const double a_side = mixed_partial_limit(f, t, s, orders, ps, cfg);
    const Field2D swapped = [&f](double u, double v) { return f(v, u); };
    const double b_side = mixed_partial_limit(
        swapped, s, t, MixedOrders{orders.kappa, orders.alpha}, ps, cfg);
    const double residual = std::abs(a_side - b_side);
    const bool pass = residual <= tol * (1.0 + std::abs(a_side));
    recs[0]
        .num("value", a_side)
        .num("residual", residual)
        .num("tolerance", tol)
        .boolean("pass", pass)
        .num("wall_ms", elapsed_ms(start));
    return emit_records(c, recs, 0);
  } catch (const Error& e) {
    if (is_usage(e)) throw;
    recs[0].str("error", e.kind()).num("wall_ms", elapsed_ms(start));
    return emit_records(c, recs, 1);
  }
}

int run_green_check(const Common& c, const std::string& fsel,
                    const std::string& gsel, const std::string& rect_str,
                    double tol) {
  const ParameterSet ps = to_params(c);
  const Field2D f = make_field(fsel);
  const Field2D g = make_field(gsel);
  const std::vector<double> r = parse_csv_doubles(rect_str, 4, "rect");
  const std::string inputs = "f=" + fsel + " g=" + gsel + " rect=" + rect_str +
                             " " + param_echo(c);
  const auto start = Clock::now();
  std::vector<Record> recs(1);
  recs[0].str("op", "green-check").str("inputs", inputs);
  try {
    const Region2D region{Interval{r[0], r[1]}, Interval{r[2], r[3]}};
    const QuadratureConfig cfg;
    const double lhs = green_lhs(f, g, region, ps, cfg);
    const double rhs =
        green_rhs(f, g, Curve2D::rectangle_boundary(region), ps, cfg);
    const double residual = std::abs(lhs - rhs);
    const bool pass = residual <= tol * (1.0 + std::abs(lhs));
    recs[0]
        .num("lhs", lhs)
        .num("rhs", rhs)
        .num("residual", residual)
        .num("tolerance", tol)
        .boolean("pass", pass)
        .num("wall_ms", elapsed_ms(start));
    return emit_records(c, recs, 0);
  } catch (const Error& e) {
    if (is_usage(e)) throw;
    recs[0].str("error", e.kind()).num("wall_ms", elapsed_ms(start));
    return emit_records(c, recs, 1);
  }
}

int run_verify(const Common& c, const char* argv0) {
  const auto start = Clock::now();
  const std::vector<VerifyRecord> suite = run_verify_suite(resolve_self(argv0));
  const double ms = elapsed_ms(start);
  bool all_pass = true;
  std::vector<Record> recs;
  recs.reserve(suite.size());
  for (const VerifyRecord& v : suite) {
    all_pass = all_pass && v.pass;
    recs.emplace_back();
    recs.back()
        .str("op", "verify")
        .str("name", v.name)
        .num("residual", v.residual)
        .num("tolerance", v.tolerance)
        .boolean("pass", v.pass)
        .num("wall_ms", ms);
  }
  return emit_records(c, recs, all_pass ? 0 : 1);
}

}  // namespace

int run_app(int argc, char** argv) {
  CLI::App app{"truncated fractional-calculus toolkit"};
  app.require_subcommand(1);

  Common c_ml, c_deriv, c_int, c_part, c_jac, c_mixed, c_green, c_verify;

  auto* s_ml = app.add_subcommand("eval-ml", "evaluate the truncated series");
  add_common(s_ml, c_ml);
  double ml_z = 0.0, ml_zim = 0.0;
  s_ml->add_option("--z", ml_z, "series argument (real part)")->required();
  s_ml->add_option("--zim", ml_zim, "series argument (imaginary part)");

  auto* s_deriv =
      app.add_subcommand("deriv", "fractional derivative at a point");
  add_common(s_deriv, c_deriv);
  std::string deriv_f;
  double deriv_t = 1.0;
  s_deriv->add_option("--f", deriv_f, "function selector")->required();
  s_deriv->add_option("--t", deriv_t, "evaluation point")->required();

  auto* s_int = app.add_subcommand("integrate", "fractional integral over [a,t]");
  add_common(s_int, c_int);
  std::string int_f;
  double int_a = 0.0, int_t = 1.0;
  s_int->add_option("--f", int_f, "function selector")->required();
  s_int->add_option("--a", int_a, "lower endpoint");
  s_int->add_option("--t", int_t, "upper endpoint")->required();

  auto* s_part =
      app.add_subcommand("partial", "fractional partial derivative on R^2");
  add_common(s_part, c_part);
  std::string part_f, part_point = "1,1";
  int part_axis = 1;
  s_part->add_option("--f", part_f, "field selector")->required();
  s_part->add_option("--point", part_point, "base point x,y")->required();
  s_part->add_option("--axis", part_axis, "perturbed axis, 1-based");

  auto* s_jac = app.add_subcommand("jacobian", "fractional Jacobian on R^2");
  add_common(s_jac, c_jac);
  std::vector<std::string> jac_f;
  std::string jac_point = "1,1";
  s_jac->add_option("--f", jac_f, "component field selector (repeatable)")
      ->required();
  s_jac->add_option("--point", jac_point, "base point x,y")->required();

  auto* s_mixed =
      app.add_subcommand("mixed-check", "mixed-partial commutation check");
  add_common(s_mixed, c_mixed);
  std::string mixed_f;
  double mixed_t = 1.0, mixed_s = 1.0, mixed_kappa = 0.5, mixed_tol = 1e-4;
  s_mixed->add_option("--f", mixed_f, "field selector")->required();
  s_mixed->add_option("--t", mixed_t, "first coordinate")->required();
  s_mixed->add_option("--s", mixed_s, "second coordinate")->required();
  s_mixed->add_option("--kappa", mixed_kappa, "order for the second axis");
  s_mixed->add_option("--tol", mixed_tol, "pass tolerance");

  auto* s_green =
      app.add_subcommand("green-check", "weighted Green identity on a rectangle");
  add_common(s_green, c_green);
  std::string green_f, green_g, green_rect;
  double green_tol = 1e-6;
  s_green->add_option("--f", green_f, "first field selector")->required();
  s_green->add_option("--g", green_g, "second field selector")->required();
  s_green->add_option("--rect", green_rect, "rectangle x0,x1,y0,y1")->required();
  s_green->add_option("--tol", green_tol, "pass tolerance");

  auto* s_verify =
      app.add_subcommand("verify", "run the full property suite");
  add_common(s_verify, c_verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (s_ml->parsed()) return run_eval_ml(c_ml, ml_z, ml_zim);
    if (s_deriv->parsed()) return run_deriv(c_deriv, deriv_f, deriv_t);
    if (s_int->parsed()) return run_integrate(c_int, int_f, int_a, int_t);
    if (s_part->parsed()) return run_partial(c_part, part_f, part_point, part_axis);
    if (s_jac->parsed()) return run_jacobian(c_jac, jac_f, jac_point);
    if (s_mixed->parsed())
      return run_mixed_check(c_mixed, mixed_f, mixed_t, mixed_s, mixed_kappa,
                             mixed_tol);
    if (s_green->parsed())
      return run_green_check(c_green, green_f, green_g, green_rect, green_tol);
    if (s_verify->parsed()) return run_verify(c_verify, argv[0]);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return is_usage(e) ? 2 : 1;
  }
  return 2;
}

}  // namespace vfrac::cli
