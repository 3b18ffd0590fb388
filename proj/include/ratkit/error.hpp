#pragma once

#include <stdexcept>
#include <string>

namespace ratkit {

enum class ErrorKind {
  TagMismatch,
  NotStarable,
  SyntaxError,
  UnknownLetter,
  InvalidExpression,
  EpsilonPresent,
  NonBoolean,
  NonBooleanEpsilon,
  TooLarge,
  EmptyWord,
  FormatError,
};

const char* error_kind_name(ErrorKind kind);

// Every failure raised by the library carries one of the kinds above.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ratkit
