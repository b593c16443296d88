#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace vfrac {

// Error taxonomy shared by the library and the CLI. kind() is the stable
// machine-readable name reported to callers; the CLI maps UsageError to
// exit code 2 and every other kind to exit code 1.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

struct PoleError : Error {
  explicit PoleError(const std::string& w) : Error("PoleError", w) {}
};

struct OverflowError : Error {
  explicit OverflowError(const std::string& w) : Error("OverflowError", w) {}
};

struct DomainError : Error {
  explicit DomainError(const std::string& w) : Error("DomainError", w) {}
};

struct UnstableLimit : Error {
  explicit UnstableLimit(const std::string& w) : Error("UnstableLimit", w) {}
};

struct NonConvergence : Error {
  explicit NonConvergence(const std::string& w) : Error("NonConvergence", w) {}
};

struct OpenCurve : Error {
  explicit OpenCurve(const std::string& w) : Error("OpenCurve", w) {}
};

struct UsageError : Error {
  explicit UsageError(const std::string& w) : Error("UsageError", w) {}
};

}  // namespace vfrac
