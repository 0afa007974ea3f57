#include "mapcensus/error.hpp"

namespace mapcensus {

std::string_view reason_token(Reason r) noexcept {
  switch (r) {
    case Reason::NotAGroup: return "NotAGroup";
    case Reason::CapExceeded: return "CapExceeded";
    case Reason::BadParameter: return "BadParameter";
    case Reason::ParseError: return "ParseError";
    case Reason::NotInverseClosed: return "NotInverseClosed";
    case Reason::ContainsIdentity: return "ContainsIdentity";
    case Reason::NotGenerating: return "NotGenerating";
    case Reason::TooSmall: return "TooSmall";
    case Reason::NotCayleyLabeled: return "NotCayleyLabeled";
    case Reason::OutOfRange: return "OutOfRange";
    case Reason::AxiomViolation: return "AxiomViolation";
    case Reason::NotSemiRegular: return "NotSemiRegular";
    case Reason::NoOrientableStableMap: return "NoOrientableStableMap";
    case Reason::NotInvolutions: return "NotInvolutions";
    case Reason::NonIntegralSum: return "NonIntegralSum";
    case Reason::NonIntegralBurnside: return "NonIntegralBurnside";
    case Reason::NonIntegralExponent: return "NonIntegralExponent";
    case Reason::InternalInconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

int exit_code_for(Reason r) noexcept {
  switch (r) {
    case Reason::CapExceeded:
      return 2;
    case Reason::NonIntegralSum:
    case Reason::NonIntegralBurnside:
    case Reason::NonIntegralExponent:
    case Reason::InternalInconsistency:
      return 3;
    default:
      return 1;
  }
}

}  // namespace mapcensus
