#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "msmcts/motion.hpp"
#include "msmcts/scene.hpp"
#include "msmcts/topology.hpp"

namespace msmcts {

struct SearchBudget {
  std::size_t max_iterations = 20000;
  /// Seconds; infinity disables the wall-clock check.
  double wall_clock_limit = 30.0;
  /// Maximum number of regions proposed per relocated object.
  std::size_t expansion_width = 5;
  /// Depth past which expansion widens to every accessible object. Unset: 3n.
  std::optional<std::size_t> stuck_depth_threshold;
  /// Rollout length cap. Unset: 4n.
  std::optional<std::size_t> rollout_step_cap;
  double exploration_constant = 1.414;
  std::uint64_t rng_seed = 0;

  std::size_t stuck_threshold_for(std::size_t n) const {
    return stuck_depth_threshold.value_or(3 * n);
  }
  std::size_t rollout_cap_for(std::size_t n) const { return rollout_step_cap.value_or(4 * n); }

  static constexpr double kNoTimeout = std::numeric_limits<double>::infinity();
};

/// Everything a single-stage search needs to know about which objects are
/// frozen, which may move and which one must reach its goal.
class StageContext {
 public:
  /// Stage `stage_index` of `order`: earlier objects are static, the object at
  /// `stage_index` is the focus, the rest are movable.
  StageContext(const Scene& scene, const StageOrder& order, std::size_t stage_index);

  const Scene& scene() const { return *scene_; }
  ObjectId focus() const { return focus_; }
  const Arrangement& goal() const { return scene_->goal; }
  const std::vector<ObjectId>& topology() const { return topology_; }
  /// Non-static objects in topology order; includes the focus.
  const std::vector<ObjectId>& movable() const { return movable_; }
  bool is_static(ObjectId o) const { return is_static_[o]; }
  std::size_t rank(ObjectId o) const { return rank_[o]; }

  /// Place tunnel for every scene candidate, indexed like scene().candidates.
  const std::vector<Tunnel>& candidate_tunnels() const { return candidate_tunnels_; }

 private:
  const Scene* scene_;
  ObjectId focus_;
  std::vector<ObjectId> topology_;
  std::vector<ObjectId> movable_;
  std::vector<bool> is_static_;
  std::vector<std::size_t> rank_;
  std::vector<Tunnel> candidate_tunnels_;
};

using NodeId = std::size_t;

struct SearchNode {
  Arrangement arrangement;
  std::optional<Action> incoming;
  std::size_t visits = 0;
  double total_reward = 0.0;
  std::vector<NodeId> children;
  std::optional<NodeId> parent;
  std::size_t depth = 0;
  /// Displacement accumulated along the root-to-node path.
  double path_cost = 0.0;
  bool expanded = false;
  /// Set once expansion is exhausted here or in every child.
  bool dead = false;

  double mean_reward() const { return visits == 0 ? 0.0 : total_reward / visits; }
};

/// Node arena; ids stay stable as the tree grows.
class SearchTree {
 public:
  explicit SearchTree(Arrangement root_arrangement);

  NodeId root() const { return 0; }
  std::size_t size() const { return nodes_.size(); }
  SearchNode& operator[](NodeId id) { return nodes_[id]; }
  const SearchNode& operator[](NodeId id) const { return nodes_[id]; }

  NodeId add_child(NodeId parent, const Action& action);
  /// Marks `id` dead and propagates to ancestors whose children are all dead.
  void mark_dead(NodeId id);
  /// Incoming actions from the root down to `id`.
  std::vector<Action> actions_to(NodeId id) const;

 private:
  std::vector<SearchNode> nodes_;
};

/// Descends from `root` by UCB until reaching a node without live children.
/// Mean rewards are min-max normalized across siblings; unvisited children
/// win outright; ties go to the earlier child.
NodeId select(const SearchTree& tree, NodeId root, double exploration_constant);

/// Movable objects (other than the focus) that sit in the focus's pick or
/// goal tunnel, or whose own pick tunnel the focus would block once at goal.
std::vector<ObjectId> get_blocking_objects(const StageContext& ctx, const Arrangement& a);

/// True when the focus is at its goal and blocks no movable object's pick tunnel.
bool stage_complete(const StageContext& ctx, const Arrangement& a);

/// Up to `m` collision-free buffer regions for `object`, nearest first.
std::vector<Point> new_region(const StageContext& ctx, ObjectId object,
                              std::span<const ObjectId> deps, const Arrangement& a,
                              std::size_t m);

/// Subgoal-focused child actions for arrangement `a` at tree depth `depth`.
/// Every returned action satisfies action_valid.
std::vector<Action> propose_actions(const StageContext& ctx, const Arrangement& a,
                                    std::size_t depth, const SearchBudget& budget);

/// Creates all children of `node` and returns the first one.
/// Throws Error(kExpansionExhausted) if no child can be created.
NodeId expand(const StageContext& ctx, SearchTree& tree, NodeId node,
              const SearchBudget& budget);

/// Random single-branch rollout from `node`; returns minus the total
/// displacement from the root, with a penalty if the focus is not reached.
double simulate(const StageContext& ctx, const SearchTree& tree, NodeId node,
                const SearchBudget& budget, std::mt19937_64& rng);

void backpropagate(SearchTree& tree, NodeId node, double reward);

/// Runs the single-stage search until the focus reaches its goal.
/// Throws Error(kStageTimeout) or Error(kStageExhausted).
std::vector<Action> solve_stage(const StageContext& ctx, const Arrangement& start,
                                const SearchBudget& budget);

}  // namespace msmcts
