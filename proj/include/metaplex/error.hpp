#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace metaplex {

enum class ErrorCode {
  EmptyVertexList,
  DuplicateVertex,
  VertexOutOfRange,
  ZeroDimensionalSimplex,
  SimplexNotInComplex,
  AllZeroWeights,
  NegativeWeight,
  NonPositiveConcentration,
  MissingConcentration,
  WeightNotAssigned,
  SchemeInvalid,
  SchemeAxiomViolation,
  EmptyLevel,
  InvalidConfig,
  DimensionMismatch,
  NotAdjacent,
  InstanceTooLarge,
  ParseError,
};

std::string_view to_string(ErrorCode code);

/// Every recoverable failure in the library is reported as a MetaplexError
/// carrying a machine-readable code.
class MetaplexError : public std::runtime_error {
 public:
  MetaplexError(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace metaplex
