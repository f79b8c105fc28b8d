#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace zeckvec {

enum class ErrorKind {
  InvalidRecurrence,
  InvalidArgument,
  ParseError,
  NotSatisfying,
  NotNsr,
  NotEndComplete,
  CarryBlocked,
  BorrowBlocked,
  DomainError,
  CapExceeded,
  OracleExhausted,
  NonTermination,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. `kind()` distinguishes the cases the
/// CLI maps onto exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace zeckvec
