#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace vss {

// Every failure the kernel can report. The names returned by error_name()
// are stable and are what the command-line front-end prints.
enum class ErrorKind {
  IndexOutOfRange,
  NonCanonicalRank,
  RankMismatch,
  NotInvertible,
  NotOdd,
  NotHomogeneous,
  NoOddSector,
  DomainMismatch,
  NotClosed,
  BudgetExceeded,
  ParityViolation,
  DivisionByZero,
  VerificationFailed,
  ParseError,
  UsageError,
};

std::string_view error_name(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  Error(ErrorKind kind, const std::string& what, std::size_t position)
      : std::runtime_error(what), kind_(kind), position_(position) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept { return error_name(kind_); }
  // Character offset into the parsed text, for errors raised by the parser.
  std::optional<std::size_t> position() const noexcept { return position_; }

 private:
  ErrorKind kind_;
  std::optional<std::size_t> position_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace vss
