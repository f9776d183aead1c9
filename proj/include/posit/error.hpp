#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace posit {

enum class ErrorKind {
  MalformedLasso,
  UnknownLetter,
  ParseError,
  AlphabetMismatch,
  MonoidTooLarge,
  PreconditionViolated,
  InvalidStrategy,
  SearchSpaceTooLarge,
  SinkVertex,
  NotEveOnly,
  InvalidPlan,
  IncomparableLassos,
  MergeBrokeWinning,
  InvalidWitness,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI in particular) can map it to an exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace posit
