#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nrsched {

enum class ErrorKind {
  InvariantViolation,
  NonUniformRequirement,
  ZeroRequirement,
  ModelMismatch,
  SizeLimit,
  Unsolvable,
  InfeasibleSchedule,
  NotTerminal,
  StateSpaceExceeded,
  InvalidEpsilon,
  IneligibleTuple,
  InvalidProfile,
  OverflowBudget,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

/// Every library failure is reported through this exception; `kind()` lets
/// callers (the CLI in particular) map failures onto exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parse failure with a 1-based line number (0 when not tied to a line).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + message),
        line_(line),
        message_(message) {}

  std::size_t line() const noexcept { return line_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::size_t line_;
  std::string message_;
};

}  // namespace nrsched
