#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dilute {

enum class ErrorKind {
  InvalidArgument,
  DegenerateParams,
  SymbolOutOfRange,
  SizeMismatch,
  SizeTooLarge,
  UnsupportedFlavor,
  CubicViolation,
  RankError,
  CatalogViolation,
  NotConverged,
  IndexOutOfRange,
  Io,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the ErrorKind tags so
/// callers (the CLI in particular) can map it onto exit codes and reports.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace dilute
