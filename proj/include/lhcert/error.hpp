#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lhcert {

enum class ErrorKind {
  ZeroDenominator,
  Parse,
  NotClearable,
  DivByZeroBall,
  InvalidOrder,
  InvalidArgument,
  IdentityViolation,
  DegenerateTruncation,
  QuadFailure,
  OutOfValidity,
  Inconclusive,
  NoWitnessFound,
  ZeroDenominatorCos,
  InconclusiveDenominator,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::NotClearable: return "NotClearable";
    case ErrorKind::DivByZeroBall: return "DivByZeroBall";
    case ErrorKind::InvalidOrder: return "InvalidOrder";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::IdentityViolation: return "IdentityViolation";
    case ErrorKind::DegenerateTruncation: return "DegenerateTruncation";
    case ErrorKind::QuadFailure: return "QuadFailure";
    case ErrorKind::OutOfValidity: return "OutOfValidity";
    case ErrorKind::Inconclusive: return "Inconclusive";
    case ErrorKind::NoWitnessFound: return "NoWitnessFound";
    case ErrorKind::ZeroDenominatorCos: return "ZeroDenominatorCos";
    case ErrorKind::InconclusiveDenominator: return "InconclusiveDenominator";
  }
  return "Unknown";
}

}  // namespace lhcert
