#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gmalg {

enum class ErrorKind {
  DimensionMismatch,
  NotEnumerable,
  BudgetExceeded,
  InvalidAlgebra,
  InvalidContext,
  NotFaithful,
  NoSolution,
  TwoTorsion,
  NotKCommuting,
  NotDerivation,
  HypothesesNotMet,
  TheoremViolation,
  BadSplit,
  BadShape,
  BadInput,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotEnumerable: return "NotEnumerable";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::InvalidAlgebra: return "InvalidAlgebra";
    case ErrorKind::InvalidContext: return "InvalidContext";
    case ErrorKind::NotFaithful: return "NotFaithful";
    case ErrorKind::NoSolution: return "NoSolution";
    case ErrorKind::TwoTorsion: return "TwoTorsion";
    case ErrorKind::NotKCommuting: return "NotKCommuting";
    case ErrorKind::NotDerivation: return "NotDerivation";
    case ErrorKind::HypothesesNotMet: return "HypothesesNotMet";
    case ErrorKind::TheoremViolation: return "TheoremViolation";
    case ErrorKind::BadSplit: return "BadSplit";
    case ErrorKind::BadShape: return "BadShape";
    case ErrorKind::BadInput: return "BadInput";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a kind so callers (the CLI in
/// particular) can map it onto an exit code without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace gmalg
