#include "metaplex/error.hpp"

namespace metaplex {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyVertexList: return "EmptyVertexList";
    case ErrorCode::DuplicateVertex: return "DuplicateVertex";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::ZeroDimensionalSimplex: return "ZeroDimensionalSimplex";
    case ErrorCode::SimplexNotInComplex: return "SimplexNotInComplex";
    case ErrorCode::AllZeroWeights: return "AllZeroWeights";
    case ErrorCode::NegativeWeight: return "NegativeWeight";
    case ErrorCode::NonPositiveConcentration: return "NonPositiveConcentration";
    case ErrorCode::MissingConcentration: return "MissingConcentration";
    case ErrorCode::WeightNotAssigned: return "WeightNotAssigned";
    case ErrorCode::SchemeInvalid: return "SchemeInvalid";
    case ErrorCode::SchemeAxiomViolation: return "SchemeAxiomViolation";
    case ErrorCode::EmptyLevel: return "EmptyLevel";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotAdjacent: return "NotAdjacent";
    case ErrorCode::InstanceTooLarge: return "InstanceTooLarge";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace metaplex
