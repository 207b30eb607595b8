#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace polyapprox {

// Every failure the library reports carries one of these names; the CLI
// prints the name so scripts can match on it.
enum class ErrorKind {
  kNonFiniteValue,
  kInvalidArgument,
  kDegreeExceedsHorizon,
  kNotAHilbertSpace,
  kNonpositiveWeight,
  kNotPositiveDefinite,
  kNotContractive,
  kDegenerateSymbol,
  kIllConditionedMate,
  kMissingRow,
  kSingularGram,
  kHorizonExhausted,
  kTailNotControlled,
  kDivergentEvidence,
  kInsufficientQuadrature,
  kHorizonExceeded,
  kConfigError,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const { return kind_; }
  std::string_view name() const { return to_string(kind_); }

 private:
  ErrorKind kind_;
};

}  // namespace polyapprox
