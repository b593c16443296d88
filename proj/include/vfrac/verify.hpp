#pragma once

#include <string>
#include <vector>

namespace vfrac {

// One property check: residual is the measured quantity, tolerance the bound
// it was held to, pass the verdict. For bounds of the form "stays above x"
// the residual is the margin, oriented so that pass == (residual <= tolerance)
// never needs a comment to read.
struct VerifyRecord {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

// Runs the full property suite: series identities, quadrature laws, the
// scalar operator algebra, Jacobian factorization and residual decay, mixed
// partials, the Green identity, and (when self_exe is nonempty) subprocess
// checks of the command-line tool's determinism and exit codes. Deterministic
// case order; never throws on a failing property, only records it.
std::vector<VerifyRecord> run_verify_suite(const std::string& self_exe);

}  // namespace vfrac
