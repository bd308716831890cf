#pragma once

#include <stdexcept>
#include <string>

namespace xideform {

struct XideformError : std::runtime_error {
  explicit XideformError(const std::string& what) : std::runtime_error(what) {}
};

struct DomainError : XideformError { using XideformError::XideformError; };
struct PoleError : XideformError { using XideformError::XideformError; };
struct PrecisionError : XideformError { using XideformError::XideformError; };
struct ModeError : XideformError { using XideformError::XideformError; };
struct PoleCrossingError : XideformError { using XideformError::XideformError; };
struct PoleProximityError : XideformError { using XideformError::XideformError; };
struct BoundaryZeroError : XideformError { using XideformError::XideformError; };
struct ConvergenceError : XideformError { using XideformError::XideformError; };
struct MarginError : XideformError { using XideformError::XideformError; };
struct WitnessNotFoundError : XideformError { using XideformError::XideformError; };
struct NoShiftFoundError : XideformError { using XideformError::XideformError; };
struct ConfigError : XideformError { using XideformError::XideformError; };

}  // namespace xideform
