#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace msmcts {

enum class ErrorCode {
  kDegenerateTarget,
  kEmptyGrid,
  kGenerationFailure,
  kCycleDetected,
  kExpansionExhausted,
  kStageTimeout,
  kStageExhausted,
  kInvalidInputPlan,
  kInvalidPlan,
  kInvalidArgument,
  kParse,
};

std::string_view to_string(ErrorCode code);

/// Every recoverable failure in the library is raised as an Error carrying a code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace msmcts
