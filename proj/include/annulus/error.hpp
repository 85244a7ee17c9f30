#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace annulus {

enum class ErrorKind {
  NumericOverflow,
  InternalInconsistency,
  ParameterDomain,
  OutOfRange,
  Index,
  ZeroOnCircle,
  NonIntegerWinding,
  Nonconvergence,
  SingularPoint,
  Precondition,
  OutOfClass,
  Degenerate,
  Format,
};

std::string_view to_string(ErrorKind kind);

/// Single exception type for the library; `kind()` tells callers which
/// contract was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace annulus
