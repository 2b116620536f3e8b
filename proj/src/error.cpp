#include "tiltkit/error.hpp"

namespace tiltkit {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NonzeroRemainder: return "NonzeroRemainder";
    case ErrorCode::ZeroAtOne: return "ZeroAtOne";
    case ErrorCode::EmptySupport: return "EmptySupport";
    case ErrorCode::ZeroTotalMass: return "ZeroTotalMass";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::PoleAtGamma: return "PoleAtGamma";
    case ErrorCode::NotInM: return "NotInM";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::CapTooSmall: return "CapTooSmall";
    case ErrorCode::PrecisionNotReached: return "PrecisionNotReached";
    case ErrorCode::DegreeCapExceeded: return "DegreeCapExceeded";
    case ErrorCode::NotWellDefined: return "NotWellDefined";
    case ErrorCode::NotPolynomial: return "NotPolynomial";
    case ErrorCode::MissingPairs: return "MissingPairs";
    case ErrorCode::OrbitCapExceeded: return "OrbitCapExceeded";
    case ErrorCode::SearchCapExceeded: return "SearchCapExceeded";
    case ErrorCode::OddCoefficient: return "OddCoefficient";
    case ErrorCode::MissingGenerator: return "MissingGenerator";
  }
  return "Unknown";
}

}  // namespace tiltkit
