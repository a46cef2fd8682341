#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kint {

enum class ErrorCode {
  // formula construction
  OutOfRangeLiteral,
  TautologicalClause,
  WeightCountMismatch,
  PartialAssignment,
  // orderings
  OrderingMismatch,
  UnknownClause,
  // merge
  EmptyClause,
  EmptyClauseInMerge,
  // expansion / ps machinery
  OverlapError,
  CutOutOfRange,
  TooManyVariables,
  TooManyInterleavings,
  // hardness generator
  InvalidInstance,
  NotASolution,
  MissingInterval,
  InfeasibleParameters,
  // parsing
  MalformedHeader,
  LiteralOutOfRange,
  ClauseCountMismatch,
  ZeroWeight,
  NotAPermutation,
  MissingLine,
  DuplicateElement,
  MissingElement,
  UnknownToken,
  TrailingGarbage,
};

std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace kint
