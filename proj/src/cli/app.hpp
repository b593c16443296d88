#pragma once

namespace vfrac::cli {

// Full command-line front end. Returns the process exit code:
// 0 success, 1 operator error (reported in the output record), 2 usage error.
int run_app(int argc, char** argv);

}  // namespace vfrac::cli
