#include "kint/error.hpp"

namespace kint {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::OutOfRangeLiteral: return "OutOfRangeLiteral";
    case ErrorCode::TautologicalClause: return "TautologicalClause";
    case ErrorCode::WeightCountMismatch: return "WeightCountMismatch";
    case ErrorCode::PartialAssignment: return "PartialAssignment";
    case ErrorCode::OrderingMismatch: return "OrderingMismatch";
    case ErrorCode::UnknownClause: return "UnknownClause";
    case ErrorCode::EmptyClause: return "EmptyClause";
    case ErrorCode::EmptyClauseInMerge: return "EmptyClauseInMerge";
    case ErrorCode::OverlapError: return "OverlapError";
    case ErrorCode::CutOutOfRange: return "CutOutOfRange";
    case ErrorCode::TooManyVariables: return "TooManyVariables";
    case ErrorCode::TooManyInterleavings: return "TooManyInterleavings";
    case ErrorCode::InvalidInstance: return "InvalidInstance";
    case ErrorCode::NotASolution: return "NotASolution";
    case ErrorCode::MissingInterval: return "MissingInterval";
    case ErrorCode::InfeasibleParameters: return "InfeasibleParameters";
    case ErrorCode::MalformedHeader: return "MalformedHeader";
    case ErrorCode::LiteralOutOfRange: return "LiteralOutOfRange";
    case ErrorCode::ClauseCountMismatch: return "ClauseCountMismatch";
    case ErrorCode::ZeroWeight: return "ZeroWeight";
    case ErrorCode::NotAPermutation: return "NotAPermutation";
    case ErrorCode::MissingLine: return "MissingLine";
    case ErrorCode::DuplicateElement: return "DuplicateElement";
    case ErrorCode::MissingElement: return "MissingElement";
    case ErrorCode::UnknownToken: return "UnknownToken";
    case ErrorCode::TrailingGarbage: return "TrailingGarbage";
  }
  return "UnknownError";
}

}  // namespace kint
