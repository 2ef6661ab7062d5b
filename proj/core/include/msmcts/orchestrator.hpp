#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "msmcts/mcts.hpp"
#include "msmcts/motion.hpp"
#include "msmcts/scene.hpp"

namespace msmcts {

struct Plan {
  std::vector<Action> actions;
  double total_displacement = 0.0;
  std::size_t steps = 0;

  static Plan from_actions(std::vector<Action> actions);
};

enum class FailureKind { kTimeout, kStageExhausted, kTopologyCycle };

std::string_view to_string(FailureKind kind);

struct PlanReport {
  bool success = false;
  std::optional<Plan> plan;
  double wall_time = 0.0;
  std::optional<FailureKind> failure_kind;
};

struct ValidationReport {
  bool valid = false;
  /// Index of the first offending action; equals steps when only the
  /// terminal arrangement misses the goal.
  std::optional<std::size_t> first_failing_step;
  std::string reason;
};

/// Multi-stage search: one single-stage search per object in stage order,
/// then optimize_plan. `budget.wall_clock_limit` is the global limit and is
/// shared out evenly across the stages still to run.
PlanReport plan(const Scene& scene, const SearchBudget& budget);

/// Merges consecutive same-object moves, then merges non-adjacent same-object
/// pairs whenever the shortened plan still replays without collision.
/// Throws Error(kInvalidInputPlan) if `plan` does not replay from the start.
Plan optimize_plan(const Plan& plan, const Scene& scene);

ValidationReport validate_plan(const Scene& scene, const Plan& plan);

/// Replays `actions` from `scene.start`; returns the final arrangement, or
/// nullopt at the first invalid action (its index goes to `failed_at`).
std::optional<Arrangement> replay(const Scene& scene, std::span<const Action> actions,
                                  std::size_t* failed_at = nullptr);

}  // namespace msmcts
