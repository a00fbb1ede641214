#include "turan4/error.hpp"

namespace turan4 {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::EdgeArityNot4: return "EdgeArityNot4";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::TooLargeForBruteForce: return "TooLargeForBruteForce";
    case ErrorCode::VariantOutOfRange: return "VariantOutOfRange";
    case ErrorCode::InvalidCriticalSet: return "InvalidCriticalSet";
    case ErrorCode::DFlagUnjustified: return "DFlagUnjustified";
    case ErrorCode::PartitionMismatch: return "PartitionMismatch";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::DepthTooLargeToMaterialize: return "DepthTooLargeToMaterialize";
    case ErrorCode::LambdaOutOfRange: return "LambdaOutOfRange";
    case ErrorCode::MTooSmall: return "MTooSmall";
    case ErrorCode::InvariantViolated: return "InvariantViolated";
    case ErrorCode::UncertifiedAlpha: return "UncertifiedAlpha";
    case ErrorCode::RatioOutOfRange: return "RatioOutOfRange";
    case ErrorCode::MissingBaseEntry: return "MissingBaseEntry";
    case ErrorCode::TableConflict: return "TableConflict";
    case ErrorCode::NonPositiveWeight: return "NonPositiveWeight";
    case ErrorCode::UnknownConstruction: return "UnknownConstruction";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace turan4
