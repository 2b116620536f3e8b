#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tiltkit {

enum class ErrorCode {
  ParseError,
  InvalidArgument,
  NonzeroRemainder,
  ZeroAtOne,
  EmptySupport,
  ZeroTotalMass,
  ZeroPolynomial,
  PoleAtGamma,
  NotInM,
  CapExceeded,
  PreconditionViolated,
  CapTooSmall,
  PrecisionNotReached,
  DegreeCapExceeded,
  NotWellDefined,
  NotPolynomial,
  MissingPairs,
  OrbitCapExceeded,
  SearchCapExceeded,
  OddCoefficient,
  MissingGenerator,
};

std::string_view error_name(ErrorCode code) noexcept;

/// Domain error raised by every library operation. The code is stable and is
/// what the CLI reports in its machine-readable error object.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tiltkit
