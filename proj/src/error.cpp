#include "gainrank/error.hpp"

namespace gainrank {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidGain: return "InvalidGain";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::InvalidBase: return "InvalidBase";
    case ErrorCode::InvalidEdge: return "InvalidEdge";
    case ErrorCode::UnknownCatalogId: return "UnknownCatalogId";
    case ErrorCode::GainMismatch: return "GainMismatch";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::NotACycle: return "NotACycle";
    case ErrorCode::NotAPendant: return "NotAPendant";
    case ErrorCode::NotBicyclic: return "NotBicyclic";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::TypeParityError: return "TypeParityError";
    case ErrorCode::NotInCatalog: return "NotInCatalog";
    case ErrorCode::HasTwins: return "HasTwins";
    case ErrorCode::UnknownClaim: return "UnknownClaim";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace gainrank
