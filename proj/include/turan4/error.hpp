#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace turan4 {

enum class ErrorCode {
  IndexOutOfRange,
  EdgeArityNot4,
  ParseError,
  TooLargeForBruteForce,
  VariantOutOfRange,
  InvalidCriticalSet,
  DFlagUnjustified,
  PartitionMismatch,
  HypothesisViolated,
  DepthTooLargeToMaterialize,
  LambdaOutOfRange,
  MTooSmall,
  InvariantViolated,
  UncertifiedAlpha,
  RatioOutOfRange,
  MissingBaseEntry,
  TableConflict,
  NonPositiveWeight,
  UnknownConstruction,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

}  // namespace turan4
