#include "msmcts/error.hpp"

namespace msmcts {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDegenerateTarget: return "degenerate-target";
    case ErrorCode::kEmptyGrid: return "empty-grid";
    case ErrorCode::kGenerationFailure: return "generation-failure";
    case ErrorCode::kCycleDetected: return "cycle-detected";
    case ErrorCode::kExpansionExhausted: return "expansion-exhausted";
    case ErrorCode::kStageTimeout: return "stage-timeout";
    case ErrorCode::kStageExhausted: return "stage-exhausted";
    case ErrorCode::kInvalidInputPlan: return "invalid-input-plan";
    case ErrorCode::kInvalidPlan: return "invalid-plan";
    case ErrorCode::kInvalidArgument: return "invalid-argument";
    case ErrorCode::kParse: return "parse-error";
  }
  return "unknown";
}

}  // namespace msmcts
