#pragma once

#include <string>
#include <vector>

#include "vfrac/maps.hpp"

namespace vfrac::cli {

// Resolves a one-variable selector:
//   sin | cos | exp | ln | poly:<c0,c1,...> | expsum:<a> | pow:<a>
// Selectors compose with '@', outermost first: "sin@poly:0,0,1" is sin(t^2).
// Throws UsageError on anything unrecognized.
ScalarMap make_scalar(const std::string& selector);

// Resolves a two-variable selector:
//   poly2:<terms> | expsum:<a> | sincos
// poly2 terms are '+'- or ','-separated monomials "[coef]x[i]y[j]", e.g.
// "poly2:xy", "poly2:x2", "poly2:2x2y+3". expsum:<a> is e^{a(x+y)}; sincos is
// sin(x)cos(y).
Field2D make_field(const std::string& selector);

// Vector-valued map on R^2 assembled from per-component field selectors.
VectorMap make_vector_field(const std::vector<std::string>& selectors);

}  // namespace vfrac::cli
