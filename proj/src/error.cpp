#include "dilute/error.hpp"

namespace dilute {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::DegenerateParams: return "DegenerateParams";
    case ErrorKind::SymbolOutOfRange: return "SymbolOutOfRange";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::SizeTooLarge: return "SizeTooLarge";
    case ErrorKind::UnsupportedFlavor: return "UnsupportedFlavor";
    case ErrorKind::CubicViolation: return "CubicViolation";
    case ErrorKind::RankError: return "RankError";
    case ErrorKind::CatalogViolation: return "CatalogViolation";
    case ErrorKind::NotConverged: return "NotConverged";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace dilute
