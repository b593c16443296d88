#include "vfrac/limit.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "vfrac/errors.hpp"

namespace vfrac {

void LimitConfig::validate() const {
  if (!(eps_base > 0.0 && eps_base <= 1e-2)) {
    throw UsageError("eps_base in (0, 1e-2] violated");
  }
  if (eps_levels < 2) throw UsageError("eps_levels >= 2 violated");
  if (richardson_order < 0) throw UsageError("richardson_order >= 0 violated");
}

namespace detail {

LimitResult richardson_limit(const std::function<double(double)>& quotient,
                             const LimitConfig& cfg) {
  cfg.validate();
  const int levels = cfg.eps_levels;
  const int order = std::min(cfg.richardson_order, levels - 1);

  // T[j][m]: level j, column m; column m cancels the eps^m term.
  std::vector<std::vector<double>> t(levels);
  for (int j = 0; j < levels; ++j) {
    t[j].resize(order + 1);
    t[j][0] = quotient(cfg.eps_base * std::pow(2.0, -j));
    for (int m = 1; m <= std::min(j, order); ++m) {
      t[j][m] = t[j][m - 1] + (t[j][m - 1] - t[j - 1][m - 1]) /
                                  (std::pow(2.0, m) - 1.0);
    }
  }

  const double value = t[levels - 1][order];
  double estimate;
  if (order >= 1) {
    estimate = std::abs(t[levels - 1][order] - t[levels - 1][order - 1]);
  } else {
    estimate = std::abs(t[levels - 1][0] - t[levels - 2][0]);
  }
  const double floor = 1e-15 * (1.0 + std::abs(value));
  estimate = std::max(estimate, floor);

  // Instability trigger: the deepest two extrapolants disagree by far more
  // than the column-difference estimate claims. The absolute floor keeps the
  // trigger above the noise plateau of nested evaluations (whose level and
  // column differences are both noise-scale, so their ratio is heavy-tailed)
  // while still catching divergent or jumping quotients, which disagree at
  // the scale of the value itself.
  const int prev_order = std::min(levels - 2, order);
  const double prev = t[levels - 2][prev_order];
  if (std::abs(value - prev) > 1e3 * estimate &&
      std::abs(value - prev) > 1e-5 * (1.0 + std::abs(value))) {
    throw UnstableLimit(
        "limit extrapolation: successive extrapolants differ by more than "
        "1e3 times the estimated error");
  }
  return LimitResult{value, estimate};
}

}  // namespace detail

}  // namespace vfrac
