#pragma once

#include <functional>

namespace vfrac {

// Discretization of the eps -> 0 limit quotient: a geometric ladder
// eps_base * 2^-j, j = 0..eps_levels-1, combined by Richardson
// extrapolation up to richardson_order (clamped to eps_levels-1).
struct LimitConfig {
  double eps_base = 1e-3;
  int eps_levels = 6;
  int richardson_order = 3;

  // Throws UsageError naming the violated constraint.
  void validate() const;

  LimitConfig deeper(int extra_levels) const {
    LimitConfig out = *this;
    out.eps_levels += extra_levels;
    return out;
  }
};

struct LimitResult {
  double value = 0.0;
  double error_estimate = 0.0;
};

namespace detail {

// Extrapolates quotient(eps) over the ladder. The quotient is assumed to
// admit an expansion value + a1*eps + a2*eps^2 + ... so each Richardson
// column cancels one more power. Raises UnstableLimit when the deepest two
// extrapolants disagree by more than 1e3 times the internal error estimate
// (past a machine-noise floor), which flags noise-dominated tables.
LimitResult richardson_limit(const std::function<double(double)>& quotient,
                             const LimitConfig& cfg);

}  // namespace detail

}  // namespace vfrac
