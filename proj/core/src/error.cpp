#include "qcover/error.hpp"

namespace qcover {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::EmptyFacet: return "EmptyFacet";
    case ErrorCode::InvalidVertex: return "InvalidVertex";
    case ErrorCode::RepeatedVertex: return "RepeatedVertex";
    case ErrorCode::DuplicateFacet: return "DuplicateFacet";
    case ErrorCode::AntichainViolation: return "AntichainViolation";
    case ErrorCode::UncoveredVertex: return "UncoveredVertex";
    case ErrorCode::TooManyVertices: return "TooManyVertices";
    case ErrorCode::UnknownFacetId: return "UnknownFacetId";
    case ErrorCode::EmptySelection: return "EmptySelection";
    case ErrorCode::NotAPermutation: return "NotAPermutation";
    case ErrorCode::InvalidLeafOrder: return "InvalidLeafOrder";
    case ErrorCode::UnknownNode: return "UnknownNode";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::NotACycle: return "NotACycle";
    case ErrorCode::NotAKCover: return "NotAKCover";
    case ErrorCode::NotALeaf: return "NotALeaf";
    case ErrorCode::NoFreeVertex: return "NoFreeVertex";
    case ErrorCode::NotQuasiTree: return "NotQuasiTree";
    case ErrorCode::NotSpecialOddCycle: return "NotSpecialOddCycle";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NTooSmall: return "NTooSmall";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace qcover
