#include "annulus/error.hpp"

namespace annulus {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NumericOverflow: return "numeric overflow";
    case ErrorKind::InternalInconsistency: return "internal inconsistency";
    case ErrorKind::ParameterDomain: return "parameter domain";
    case ErrorKind::OutOfRange: return "out of range";
    case ErrorKind::Index: return "index";
    case ErrorKind::ZeroOnCircle: return "zero on circle";
    case ErrorKind::NonIntegerWinding: return "non-integer winding";
    case ErrorKind::Nonconvergence: return "refinement nonconvergence";
    case ErrorKind::SingularPoint: return "singular point";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::OutOfClass: return "out of class";
    case ErrorKind::Degenerate: return "degenerate";
    case ErrorKind::Format: return "format";
  }
  return "unknown";
}

}  // namespace annulus
