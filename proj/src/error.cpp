#include "vss/error.hpp"

namespace vss {

std::string_view error_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NonCanonicalRank: return "NonCanonicalRank";
    case ErrorKind::RankMismatch: return "RankMismatch";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::NotOdd: return "NotOdd";
    case ErrorKind::NotHomogeneous: return "NotHomogeneous";
    case ErrorKind::NoOddSector: return "NoOddSector";
    case ErrorKind::DomainMismatch: return "DomainMismatch";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::ParityViolation: return "ParityViolation";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::VerificationFailed: return "VerificationFailed";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UsageError: return "UsageError";
  }
  return "UnknownError";
}

}  // namespace vss
