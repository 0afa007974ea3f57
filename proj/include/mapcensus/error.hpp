#ifndef MAPCENSUS_ERROR_HPP
#define MAPCENSUS_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace mapcensus {

/// Machine-readable failure categories. Every Error carries exactly one;
/// the CLI prints its token on the last line of an error report.
enum class Reason {
  NotAGroup,
  CapExceeded,
  BadParameter,
  ParseError,
  NotInverseClosed,
  ContainsIdentity,
  NotGenerating,
  TooSmall,
  NotCayleyLabeled,
  OutOfRange,
  AxiomViolation,
  NotSemiRegular,
  NoOrientableStableMap,
  NotInvolutions,
  NonIntegralSum,
  NonIntegralBurnside,
  NonIntegralExponent,
  InternalInconsistency,
};

std::string_view reason_token(Reason r) noexcept;

/// Process exit code associated with a failure category:
/// 1 validation, 2 cap exceeded, 3 internal invariant failure.
int exit_code_for(Reason r) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Reason reason, const std::string& what) : std::runtime_error(what), reason_(reason) {}

  Reason reason() const noexcept { return reason_; }
  std::string_view token() const noexcept { return reason_token(reason_); }

 private:
  Reason reason_;
};

}  // namespace mapcensus

#endif  // MAPCENSUS_ERROR_HPP
