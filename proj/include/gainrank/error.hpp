#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gainrank {

enum class ErrorCode {
  InvalidGain,
  TooSmall,
  InvalidBase,
  InvalidEdge,
  UnknownCatalogId,
  GainMismatch,
  VertexOutOfRange,
  NotHermitian,
  InternalInconsistency,
  NoConvergence,
  NotACycle,
  NotAPendant,
  NotBicyclic,
  NotConnected,
  TypeParityError,
  NotInCatalog,
  HasTwins,
  UnknownClaim,
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gainrank
