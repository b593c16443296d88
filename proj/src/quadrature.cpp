#include "vfrac/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "vfrac/detail/kahan.hpp"
#include "vfrac/errors.hpp"

namespace vfrac {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Nested pair of Fejer (second rule) quadratures on (-1, 1): the fine rule
// uses the interior Chebyshev points theta_j = j*pi/m, j = 1..m-1, and the
// half-order rule reuses every second node. Open rules keep endpoint
// singularities of transformed integrands out of the sample set. Weights
// follow the closed-form sine series, exact for polynomials up to degree
// m-1 on the fine level.
struct PanelRule {
  std::vector<double> nodes;    // fine nodes, size m-1
  std::vector<double> w_fine;   // fine weights
  std::vector<double> w_half;   // half-order weights on shared nodes, else 0
};

std::vector<double> fejer2_weights(int m) {
  std::vector<double> w(m - 1);
  for (int j = 1; j < m; ++j) {
    double theta = j * kPi / m;
    double s = 0.0;
    for (int k = 1; k <= m / 2; ++k) {
      s += std::sin((2 * k - 1) * theta) / (2 * k - 1);
    }
    w[j - 1] = 4.0 / m * std::sin(theta) * s;
  }
  return w;
}

PanelRule make_rule(int nodes_per_panel) {
  int n = std::max(nodes_per_panel, 3);
  if (n % 2 == 0) ++n;  // m = n+1 must be even so the half rule nests
  const int m = n + 1;
  PanelRule r;
  r.nodes.resize(n);
  for (int j = 1; j <= n; ++j) r.nodes[j - 1] = std::cos(j * kPi / m);
  r.w_fine = fejer2_weights(m);
  r.w_half.assign(n, 0.0);
  std::vector<double> wc = fejer2_weights(m / 2);
  for (int j = 1; j < m / 2; ++j) r.w_half[2 * j - 1] = wc[j - 1];
  return r;
}

struct Panel {
  double lo, hi;
  double value;
  double err;
};

Panel eval_panel(const ScalarMap& g, double lo, double hi,
                 const PanelRule& r) {
  const double c = 0.5 * (lo + hi);
  const double h = 0.5 * (hi - lo);
  double fine = 0.0, half = 0.0;
  bool ok = true;
  for (size_t i = 0; i < r.nodes.size(); ++i) {
    double y = g(c + h * r.nodes[i]);
    if (!std::isfinite(y)) {
      ok = false;
      break;
    }
    fine += r.w_fine[i] * y;
    half += r.w_half[i] * y;
  }
  Panel p{lo, hi, h * fine, std::abs(h * (fine - half))};
  if (!ok || !std::isfinite(p.value)) {
    p.value = 0.0;
    p.err = std::numeric_limits<double>::infinity();
  }
  return p;
}

}  // namespace

void QuadratureConfig::validate() const {
  if (!(abs_tol >= 1e-14)) throw UsageError("abs_tol >= 1e-14 violated");
  if (!(rel_tol >= 1e-14)) throw UsageError("rel_tol >= 1e-14 violated");
  if (max_subdivisions < 1 || max_subdivisions > 1000000) {
    throw UsageError("max_subdivisions in [1, 1e6] violated");
  }
  if (nodes_per_panel < 1) throw UsageError("nodes_per_panel >= 1 violated");
}

double integrate_adaptive(const ScalarMap& g, Interval iv,
                          const QuadratureConfig& cfg) {
  cfg.validate();
  if (!std::isfinite(iv.lo) || !std::isfinite(iv.hi) || iv.lo > iv.hi) {
    throw DomainError("integration interval requires finite lo <= hi");
  }
  if (iv.lo == iv.hi) return 0.0;

  const PanelRule rule = make_rule(cfg.nodes_per_panel);
  std::vector<Panel> panels;
  panels.push_back(eval_panel(g, iv.lo, iv.hi, rule));

  for (int splits = 0;; ++splits) {
    double value = 0.0, err = 0.0;
    for (const Panel& p : panels) {
      value += p.value;
      err += p.err;
    }
    if (err <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(value))) break;
    if (splits >= cfg.max_subdivisions) {
      throw NonConvergence(
          "adaptive quadrature: max_subdivisions exhausted before reaching "
          "the requested tolerance");
    }
    size_t worst = 0;
    for (size_t i = 1; i < panels.size(); ++i) {
      if (panels[i].err > panels[worst].err ||
          (panels[i].err == panels[worst].err &&
           panels[i].lo < panels[worst].lo)) {
        worst = i;
      }
    }
    const double lo = panels[worst].lo, hi = panels[worst].hi;
    const double mid = 0.5 * (lo + hi);
    if (!(lo < mid && mid < hi)) {
      throw NonConvergence(
          "adaptive quadrature: interval too narrow to subdivide further");
    }
    panels[worst] = eval_panel(g, lo, mid, rule);
    panels.push_back(eval_panel(g, mid, hi, rule));
  }

  std::sort(panels.begin(), panels.end(),
            [](const Panel& a, const Panel& b) { return a.lo < b.lo; });
  detail::KahanSum<double> total;
  for (const Panel& p : panels) total.add(p.value);
  return total.value();
}

double integrate_weighted(const ScalarMap& f, Interval iv, double alpha,
                          const QuadratureConfig& cfg) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw DomainError("integrate_weighted: alpha in (0,1] violated");
  }
  if (!(iv.lo >= 0.0)) {
    throw DomainError("integrate_weighted: lo >= 0 violated");
  }
  const double inv_alpha = 1.0 / alpha;
  Interval u{std::pow(iv.lo, alpha), std::pow(iv.hi, alpha)};
  auto g = [&](double t) { return f(std::pow(t, inv_alpha)) * inv_alpha; };
  return integrate_adaptive(g, u, cfg);
}

double double_integral_rect(const Field2D& h, Rect rect,
                            const QuadratureConfig& cfg) {
  cfg.validate();
  QuadratureConfig half = cfg;
  half.abs_tol = 0.5 * cfg.abs_tol;
  half.rel_tol = 0.5 * cfg.rel_tol;
  auto outer = [&](double y) {
    auto slice = [&, y](double x) { return h(x, y); };
    return integrate_adaptive(slice, rect.x, half);
  };
  return integrate_adaptive(outer, rect.y, half);
}

}  // namespace vfrac
