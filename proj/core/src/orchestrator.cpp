#include "msmcts/orchestrator.hpp"

#include <chrono>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "msmcts/error.hpp"
#include "msmcts/topology.hpp"

namespace msmcts {

Plan Plan::from_actions(std::vector<Action> actions) {
  Plan p;
  p.actions = std::move(actions);
  p.steps = p.actions.size();
  p.total_displacement = std::accumulate(
      p.actions.begin(), p.actions.end(), 0.0,
      [](double acc, const Action& a) { return acc + a.displacement(); });
  return p;
}

std::string_view to_string(FailureKind kind) {
  switch (kind) {
    case FailureKind::kTimeout: return "timeout";
    case FailureKind::kStageExhausted: return "stage-exhausted";
    case FailureKind::kTopologyCycle: return "topology-cycle";
  }
  return "unknown";
}

std::optional<Arrangement> replay(const Scene& scene, std::span<const Action> actions,
                                  std::size_t* failed_at) {
  Arrangement a = scene.start;
  for (std::size_t i = 0; i < actions.size(); ++i) {
    if (!action_valid(scene, a, actions[i])) {
      if (failed_at) *failed_at = i;
      return std::nullopt;
    }
    a[actions[i].object] = actions[i].to;
  }
  return a;
}

ValidationReport validate_plan(const Scene& scene, const Plan& plan) {
  ValidationReport report;
  std::size_t failed = 0;
  const auto final_state = replay(scene, plan.actions, &failed);
  if (!final_state) {
    report.first_failing_step = failed;
    report.reason = "action " + std::to_string(failed) + " is not a valid relocation";
    return report;
  }
  for (std::size_t o = 0; o < scene.goal.size(); ++o) {
    if (!near((*final_state)[o], scene.goal[o], 1e-6)) {
      report.first_failing_step = plan.actions.size();
      report.reason = "object " + std::to_string(o) + " does not end at its goal";
      return report;
    }
  }
  report.valid = true;
  return report;
}

namespace {

bool same_final(const Arrangement& a, const Arrangement& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!near(a[i], b[i], 1e-6)) return false;
  }
  return true;
}

// Pass 1: each maximal run of consecutive moves of one object becomes a
// single move; runs that return the object to where it started vanish.
// A vanished run can bring two moves of another object together, hence the loop.
std::vector<Action> collapse_runs(std::vector<Action> actions) {
  for (;;) {
    std::vector<Action> out;
    for (std::size_t i = 0; i < actions.size();) {
      std::size_t j = i;
      while (j + 1 < actions.size() && actions[j + 1].object == actions[i].object) ++j;
      const Action merged{actions[i].object, actions[i].from, actions[j].to};
      if (!near(merged.from, merged.to)) out.push_back(merged);
      i = j + 1;
    }
    if (out.size() == actions.size()) return out;
    actions = std::move(out);
  }
}

// Pass 2, one sweep: per object, try its non-adjacent move pairs outermost
// first and keep the first merge that still replays to the same arrangement.
bool merge_pairs_once(std::vector<Action>& actions, const Scene& scene,
                      const Arrangement& final_state) {
  bool changed = false;
  for (ObjectId o = 0; o < scene.object_count(); ++o) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < actions.size(); ++i) {
      if (actions[i].object == o) idx.push_back(i);
    }
    struct Pair {
      std::size_t first, second;
    };
    std::vector<Pair> pairs;
    for (std::size_t a = 0; a < idx.size(); ++a) {
      for (std::size_t b = a + 1; b < idx.size(); ++b) {
        if (idx[b] > idx[a] + 1) pairs.push_back({idx[a], idx[b]});
      }
    }
    std::stable_sort(pairs.begin(), pairs.end(), [](const Pair& l, const Pair& r) {
      return (l.second - l.first) > (r.second - r.first);
    });

    for (const Pair& pr : pairs) {
      std::vector<Action> trial = actions;
      const Action merged{o, actions[pr.first].from, actions[pr.second].to};
      trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(pr.second));
      if (near(merged.from, merged.to)) {
        trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(pr.first));
      } else {
        trial[pr.first] = merged;
      }
      const auto end = replay(scene, trial);
      if (end && same_final(*end, final_state)) {
        actions = std::move(trial);
        changed = true;
        break;
      }
    }
  }
  return changed;
}

}  // namespace

Plan optimize_plan(const Plan& plan, const Scene& scene) {
  const auto final_state = replay(scene, plan.actions);
  if (!final_state) {
    throw Error(ErrorCode::kInvalidInputPlan, "plan does not replay from the start arrangement");
  }
  std::vector<Action> actions = collapse_runs(plan.actions);
  while (merge_pairs_once(actions, scene, *final_state)) {
    actions = collapse_runs(actions);
  }
  return Plan::from_actions(std::move(actions));
}

namespace {

std::uint64_t stage_seed(std::uint64_t base, std::size_t stage) {
  // splitmix64 step, so neighbouring stages get unrelated streams.
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (stage + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

PlanReport plan(const Scene& scene, const SearchBudget& budget) {
  using Clock = std::chrono::steady_clock;
  const auto began = Clock::now();
  const auto elapsed = [&] { return std::chrono::duration<double>(Clock::now() - began).count(); };

  PlanReport report;
  const auto fail = [&](FailureKind kind) {
    report.success = false;
    report.failure_kind = kind;
    report.wall_time = elapsed();
    return report;
  };

  StageOrder order;
  try {
    order = stage_order(build_dependency_graph(scene), scene);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kCycleDetected) return fail(FailureKind::kTopologyCycle);
    throw;
  }

  const std::size_t n = scene.object_count();
  Arrangement current = scene.start;
  std::vector<Action> combined;
  for (std::size_t stage = 0; stage < n; ++stage) {
    SearchBudget stage_budget = budget;
    stage_budget.rng_seed = stage_seed(budget.rng_seed, stage);
    if (std::isfinite(budget.wall_clock_limit)) {
      const double remaining = budget.wall_clock_limit - elapsed();
      if (remaining <= 0.0) return fail(FailureKind::kTimeout);
      stage_budget.wall_clock_limit = remaining / static_cast<double>(n - stage);
    }

    const StageContext ctx(scene, order, stage);
    std::vector<Action> sub;
    try {
      sub = solve_stage(ctx, current, stage_budget);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kStageTimeout) return fail(FailureKind::kTimeout);
      if (e.code() == ErrorCode::kStageExhausted) return fail(FailureKind::kStageExhausted);
      throw;
    }
    for (const Action& act : sub) {
      current[act.object] = act.to;
      combined.push_back(act);
    }
  }

  Plan final_plan = optimize_plan(Plan::from_actions(std::move(combined)), scene);
  if (const ValidationReport check = validate_plan(scene, final_plan); !check.valid) {
    throw std::logic_error("planner produced an invalid plan: " + check.reason);
  }
  report.success = true;
  report.plan = std::move(final_plan);
  report.wall_time = elapsed();
  return report;
}

}  // namespace msmcts
