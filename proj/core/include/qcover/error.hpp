#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qcover {

enum class ErrorCode {
  EmptyInput,
  EmptyFacet,
  InvalidVertex,
  RepeatedVertex,
  DuplicateFacet,
  AntichainViolation,
  UncoveredVertex,
  TooManyVertices,
  UnknownFacetId,
  EmptySelection,
  NotAPermutation,
  InvalidLeafOrder,
  UnknownNode,
  LengthMismatch,
  NotACycle,
  NotAKCover,
  NotALeaf,
  NoFreeVertex,
  NotQuasiTree,
  NotSpecialOddCycle,
  VerificationFailed,
  BudgetExceeded,
  NTooSmall,
  InvalidArgument,
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above; the
/// message is meant for humans and is not part of any contract.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace qcover
