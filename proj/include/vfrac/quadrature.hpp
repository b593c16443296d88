#pragma once

#include "vfrac/maps.hpp"

namespace vfrac {

struct QuadratureConfig {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  int max_subdivisions = 4096;
  int nodes_per_panel = 15;

  // Throws UsageError naming the violated constraint.
  void validate() const;
};

struct Interval {
  double lo = 0.0;
  double hi = 1.0;
};

struct Rect {
  Interval x;
  Interval y;
};

// Globally adaptive integration of g over [lo, hi]. Each panel is scored by
// a nested pair of open (interior-node) rules; the panel with the largest
// error estimate is bisected until the summed estimate drops below
// max(abs_tol, rel_tol*|result|). Accumulation order of accepted panels is
// fixed (ascending lo), so results are deterministic.
// Throws NonConvergence when max_subdivisions panels are not enough.
double integrate_adaptive(const ScalarMap& g, Interval iv,
                          const QuadratureConfig& cfg);

// Weighted integral  I = integral of f(x) * x^(alpha-1) dx  over [lo, hi],
// lo >= 0. The substitution u = x^alpha removes the endpoint singularity
// exactly: I = (1/alpha) * integral of f(u^(1/alpha)) du over
// [lo^alpha, hi^alpha]. The open panel rule never samples the endpoints, so
// f is only evaluated on (lo, hi).
double integrate_weighted(const ScalarMap& f, Interval iv, double alpha,
                          const QuadratureConfig& cfg);

// Iterated adaptive integration over an axis-aligned rectangle, inner in x
// then outer in y; the tolerance budget is split evenly between the axes.
double double_integral_rect(const Field2D& h, Rect rect,
                            const QuadratureConfig& cfg);

}  // namespace vfrac
