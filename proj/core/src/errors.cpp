#include "polyapprox/errors.hpp"

namespace polyapprox {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kNonFiniteValue: return "NonFiniteValue";
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
    case ErrorKind::kDegreeExceedsHorizon: return "DegreeExceedsHorizon";
    case ErrorKind::kNotAHilbertSpace: return "NotAHilbertSpace";
    case ErrorKind::kNonpositiveWeight: return "NonpositiveWeight";
    case ErrorKind::kNotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorKind::kNotContractive: return "NotContractive";
    case ErrorKind::kDegenerateSymbol: return "DegenerateSymbol";
    case ErrorKind::kIllConditionedMate: return "IllConditionedMate";
    case ErrorKind::kMissingRow: return "MissingRow";
    case ErrorKind::kSingularGram: return "SingularGram";
    case ErrorKind::kHorizonExhausted: return "HorizonExhausted";
    case ErrorKind::kTailNotControlled: return "TailNotControlled";
    case ErrorKind::kDivergentEvidence: return "DivergentEvidence";
    case ErrorKind::kInsufficientQuadrature: return "InsufficientQuadrature";
    case ErrorKind::kHorizonExceeded: return "HorizonExceeded";
    case ErrorKind::kConfigError: return "ConfigError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what),
      kind_(kind) {}

}  // namespace polyapprox
