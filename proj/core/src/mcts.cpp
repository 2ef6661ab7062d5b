#include "msmcts/mcts.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>

#include "msmcts/error.hpp"

namespace msmcts {

StageContext::StageContext(const Scene& scene, const StageOrder& order, std::size_t stage_index)
    : scene_(&scene), topology_(order.order) {
  const std::size_t n = scene.object_count();
  if (topology_.size() != n || stage_index >= n) {
    throw Error(ErrorCode::kInvalidArgument, "stage index outside the stage order");
  }
  focus_ = topology_[stage_index];
  is_static_.assign(n, false);
  rank_.assign(n, 0);
  for (std::size_t pos = 0; pos < n; ++pos) {
    const ObjectId o = topology_[pos];
    rank_[o] = pos;
    if (pos < stage_index) {
      is_static_[o] = true;
    } else {
      movable_.push_back(o);
    }
  }
  candidate_tunnels_.reserve(scene.candidates.size());
  for (const Point& p : scene.candidates) candidate_tunnels_.push_back(scene.tunnel(p));
}

SearchTree::SearchTree(Arrangement root_arrangement) {
  nodes_.emplace_back();
  nodes_.back().arrangement = std::move(root_arrangement);
}

NodeId SearchTree::add_child(NodeId parent, const Action& action) {
  SearchNode child;
  child.arrangement = apply_action(nodes_[parent].arrangement, action);
  child.incoming = action;
  child.parent = parent;
  child.depth = nodes_[parent].depth + 1;
  child.path_cost = nodes_[parent].path_cost + action.displacement();
  nodes_.push_back(std::move(child));
  const NodeId id = nodes_.size() - 1;
  nodes_[parent].children.push_back(id);
  return id;
}

void SearchTree::mark_dead(NodeId id) {
  std::optional<NodeId> cur = id;
  while (cur) {
    SearchNode& node = nodes_[*cur];
    if (*cur != id) {
      const bool all_dead = std::all_of(node.children.begin(), node.children.end(),
                                        [&](NodeId c) { return nodes_[c].dead; });
      if (!all_dead) return;
    }
    node.dead = true;
    cur = node.parent;
  }
}

std::vector<Action> SearchTree::actions_to(NodeId id) const {
  std::vector<Action> out;
  for (std::optional<NodeId> cur = id; cur && nodes_[*cur].incoming; cur = nodes_[*cur].parent) {
    out.push_back(*nodes_[*cur].incoming);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

NodeId select(const SearchTree& tree, NodeId root, double exploration_constant) {
  NodeId cur = root;
  while (true) {
    const SearchNode& node = tree[cur];
    std::vector<NodeId> live;
    for (NodeId c : node.children) {
      if (!tree[c].dead) live.push_back(c);
    }
    if (live.empty()) return cur;

    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (NodeId c : live) {
      if (tree[c].visits == 0) continue;
      lo = std::min(lo, tree[c].mean_reward());
      hi = std::max(hi, tree[c].mean_reward());
    }

    NodeId best = live.front();
    double best_score = -std::numeric_limits<double>::infinity();
    for (NodeId c : live) {
      const SearchNode& child = tree[c];
      if (child.visits == 0) {
        best = c;
        break;
      }
      const double q = hi - lo > kEps ? (child.mean_reward() - lo) / (hi - lo) : 1.0;
      const double explore =
          exploration_constant *
          std::sqrt(std::log(static_cast<double>(std::max<std::size_t>(node.visits, 1))) /
                    static_cast<double>(child.visits));
      const double score = q + explore;
      if (score > best_score) {
        best_score = score;
        best = c;
      }
    }
    cur = best;
  }
}

namespace {

bool intersects_any(const Tunnel& t, const Scene& scene, const Arrangement& a, ObjectId skip) {
  for (ObjectId o = 0; o < a.size(); ++o) {
    if (o != skip && tunnel_intersects_disc(t, scene.disc_at(a[o]))) return true;
  }
  return false;
}

// Objects other than `self` whose disc intersects `t`, statics included.
std::vector<ObjectId> blockers_of(const Tunnel& t, const Scene& scene, const Arrangement& a,
                                  ObjectId self) {
  std::vector<ObjectId> out;
  for (ObjectId o = 0; o < a.size(); ++o) {
    if (o != self && tunnel_intersects_disc(t, scene.disc_at(a[o]))) out.push_back(o);
  }
  return out;
}

bool contains(const std::vector<ObjectId>& v, ObjectId o) {
  return std::find(v.begin(), v.end(), o) != v.end();
}

// Dependency sets for relocating `object`: movable objects ahead of it in the
// topology, shrinking from the longest prefix down to the empty one.
// Static objects never move again, so their pick tunnels are left out.
std::vector<std::vector<ObjectId>> dependency_prefixes(const StageContext& ctx, ObjectId object,
                                                       std::optional<ObjectId> extra) {
  std::vector<std::vector<ObjectId>> out;
  const std::size_t rank = ctx.rank(object);
  for (std::size_t len = rank + 1; len-- > 0;) {
    std::vector<ObjectId> deps;
    for (std::size_t pos = 0; pos < len; ++pos) {
      const ObjectId o = ctx.topology()[pos];
      if (!ctx.is_static(o) && o != object) deps.push_back(o);
    }
    if (extra && *extra != object && !contains(deps, *extra)) deps.push_back(*extra);
    if (out.empty() || out.back() != deps) out.push_back(std::move(deps));
  }
  return out;
}

class ActionSet {
 public:
  bool add(const Action& act) {
    for (const Action& existing : actions_) {
      if (existing.object == act.object && near(existing.to, act.to)) return false;
    }
    actions_.push_back(act);
    return true;
  }
  bool empty() const { return actions_.empty(); }
  std::vector<Action> take() { return std::move(actions_); }

 private:
  std::vector<Action> actions_;
};

// Buffer moves for `object`, trying dependency prefixes until one yields regions.
void add_buffer_moves(const StageContext& ctx, const Arrangement& a, ObjectId object,
                      std::optional<ObjectId> extra_dep, std::size_t m, ActionSet& out) {
  const Scene& scene = ctx.scene();
  for (const auto& deps : dependency_prefixes(ctx, object, extra_dep)) {
    bool any = false;
    for (const Point& p : new_region(ctx, object, deps, a, m)) {
      const Action act{object, a[object], p};
      if (action_valid(scene, a, act)) {
        out.add(act);
        any = true;
      }
    }
    if (any) return;
  }
}

// Goal relocation of a blocking object, allowed when it is collision-free and
// the goal disc stays clear of both focus tunnels.
bool try_goal_move(const StageContext& ctx, const Arrangement& a, ObjectId object,
                   ActionSet& out) {
  const Scene& scene = ctx.scene();
  const Point goal = ctx.goal()[object];
  if (near(a[object], goal)) return false;
  const Action act{object, a[object], goal};
  if (!action_valid(scene, a, act)) return false;
  const Disc goal_disc = scene.disc_at(goal);
  const ObjectId focus = ctx.focus();
  if (tunnel_intersects_disc(scene.tunnel(a[focus]), goal_disc) ||
      tunnel_intersects_disc(scene.tunnel(ctx.goal()[focus]), goal_disc)) {
    return false;
  }
  return out.add(act);
}

void expand_blockers(const StageContext& ctx, const Arrangement& a,
                     std::vector<ObjectId> blocking, std::size_t m, ActionSet& out) {
  const Scene& scene = ctx.scene();
  std::vector<ObjectId> seen;
  while (!blocking.empty()) {
    std::vector<ObjectId> next;
    for (ObjectId oi : blocking) {
      seen.push_back(oi);
      const std::vector<ObjectId> pick_blockers = blockers_of(scene.tunnel(a[oi]), scene, a, oi);
      if (pick_blockers.empty()) {
        if (oi != ctx.focus() && try_goal_move(ctx, a, oi, out)) continue;
        add_buffer_moves(ctx, a, oi, std::nullopt, m, out);
        continue;
      }
      for (ObjectId oj : pick_blockers) {
        if (ctx.is_static(oj)) continue;
        if (!intersects_any(scene.tunnel(a[oj]), scene, a, oj)) {
          // oj may be the focus itself: it must step aside before oi can leave.
          add_buffer_moves(ctx, a, oj, oi, m, out);
        } else if (!contains(next, oj)) {
          next.push_back(oj);
        }
      }
    }
    if (!out.empty()) return;
    std::erase_if(next, [&](ObjectId o) { return contains(seen, o); });
    blocking = std::move(next);
  }
}

std::vector<ObjectId> accessible_movables(const StageContext& ctx, const Arrangement& a) {
  std::vector<ObjectId> out;
  for (ObjectId o : ctx.movable()) {
    if (o == ctx.focus()) continue;
    if (!intersects_any(ctx.scene().tunnel(a[o]), ctx.scene(), a, o)) out.push_back(o);
  }
  return out;
}

}  // namespace

std::vector<ObjectId> get_blocking_objects(const StageContext& ctx, const Arrangement& a) {
  const Scene& scene = ctx.scene();
  const ObjectId focus = ctx.focus();
  const Tunnel pick = scene.tunnel(a[focus]);
  const Tunnel place = scene.tunnel(ctx.goal()[focus]);
  const Disc focus_at_goal = scene.disc_at(ctx.goal()[focus]);
  std::vector<ObjectId> out;
  for (ObjectId o : ctx.movable()) {
    if (o == focus) continue;
    const Disc d = scene.disc_at(a[o]);
    if (tunnel_intersects_disc(pick, d) || tunnel_intersects_disc(place, d) ||
        tunnel_intersects_disc(scene.tunnel(a[o]), focus_at_goal)) {
      out.push_back(o);
    }
  }
  return out;
}

bool stage_complete(const StageContext& ctx, const Arrangement& a) {
  const ObjectId focus = ctx.focus();
  if (!near(a[focus], ctx.goal()[focus])) return false;
  const Disc focus_disc = ctx.scene().disc_at(a[focus]);
  for (ObjectId o : ctx.movable()) {
    if (o != focus && tunnel_intersects_disc(ctx.scene().tunnel(a[o]), focus_disc)) return false;
  }
  return true;
}

std::vector<Point> new_region(const StageContext& ctx, ObjectId object,
                              std::span<const ObjectId> deps, const Arrangement& a,
                              std::size_t m) {
  const Scene& scene = ctx.scene();
  const ObjectId focus = ctx.focus();
  const bool moving_focus = object == focus;
  const Point focus_goal = ctx.goal()[focus];
  const Disc focus_goal_disc = scene.disc_at(focus_goal);

  std::vector<Tunnel> keep_clear;
  if (!moving_focus) {
    keep_clear.push_back(scene.tunnel(a[focus]));
    keep_clear.push_back(scene.tunnel(focus_goal));
  }
  for (ObjectId d : deps) {
    if (d != object) keep_clear.push_back(scene.tunnel(a[d]));
  }

  const auto& cands = scene.candidates;
  const Point origin = a[object];
  std::vector<std::size_t> order(cands.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<double> dist(cands.size());
  for (std::size_t i = 0; i < cands.size(); ++i) dist[i] = distance(cands[i], origin);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t l, std::size_t r) { return dist[l] < dist[r] - kEps; });

  std::vector<Point> accepted;
  if (m == 0) return accepted;
  for (std::size_t idx : order) {
    const Point p = cands[idx];
    if (near(p, origin)) continue;
    // The focus reaches its goal only through the direct move.
    if (moving_focus && near(p, focus_goal)) continue;
    const Disc disc = scene.disc_at(p);
    if (!disc_in_workspace(disc, scene.workspace)) continue;

    bool ok = true;
    for (ObjectId o = 0; o < a.size() && ok; ++o) {
      if (o != object && discs_overlap(disc, scene.disc_at(a[o]))) ok = false;
    }
    for (const Tunnel& t : keep_clear) {
      if (!ok) break;
      if (tunnel_intersects_disc(t, disc)) ok = false;
    }
    if (!ok) continue;

    const Tunnel& place = ctx.candidate_tunnels()[idx];
    if (intersects_any(place, scene, a, object)) continue;
    // Keep the new spot reachable once the focus sits at its goal.
    if (!moving_focus && tunnel_intersects_disc(place, focus_goal_disc)) continue;

    accepted.push_back(p);
    if (accepted.size() == m) break;
  }
  return accepted;
}

std::vector<Action> propose_actions(const StageContext& ctx, const Arrangement& a,
                                    std::size_t depth, const SearchBudget& budget) {
  const Scene& scene = ctx.scene();
  const ObjectId focus = ctx.focus();
  const std::size_t m = budget.expansion_width;
  ActionSet out;

  std::vector<ObjectId> blocking = get_blocking_objects(ctx, a);
  if (blocking.empty()) {
    const Action direct{focus, a[focus], ctx.goal()[focus]};
    if (!near(direct.from, direct.to) && action_valid(scene, a, direct)) out.add(direct);
    return out.take();
  }

  const bool stuck = depth > budget.stuck_threshold_for(scene.object_count());
  if (!stuck) expand_blockers(ctx, a, std::move(blocking), m, out);
  if (out.empty()) {
    // Stuck: widen to every movable object that can be picked right now.
    for (ObjectId o : accessible_movables(ctx, a)) {
      if (!try_goal_move(ctx, a, o, out)) add_buffer_moves(ctx, a, o, std::nullopt, m, out);
    }
  }
  return out.take();
}

NodeId expand(const StageContext& ctx, SearchTree& tree, NodeId node,
              const SearchBudget& budget) {
  const std::vector<Action> actions =
      propose_actions(ctx, tree[node].arrangement, tree[node].depth, budget);
  tree[node].expanded = true;
  if (actions.empty()) {
    throw Error(ErrorCode::kExpansionExhausted, "no child can be created");
  }
  for (const Action& act : actions) tree.add_child(node, act);
  return tree[node].children.front();
}

double simulate(const StageContext& ctx, const SearchTree& tree, NodeId node,
                const SearchBudget& budget, std::mt19937_64& rng) {
  const Scene& scene = ctx.scene();
  const ObjectId focus = ctx.focus();
  Arrangement a = tree[node].arrangement;
  double cost = tree[node].path_cost;
  std::size_t depth = tree[node].depth;
  const std::size_t cap = budget.rollout_cap_for(scene.object_count());

  for (std::size_t step = 0; step < cap; ++step) {
    if (stage_complete(ctx, a)) return -cost;
    const std::vector<Action> actions = propose_actions(ctx, a, depth, budget);
    if (actions.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, actions.size() - 1);
    const Action& act = actions[pick(rng)];
    cost += act.displacement();
    a[act.object] = act.to;
    ++depth;
  }
  if (stage_complete(ctx, a)) return -cost;

  const std::size_t unresolved = get_blocking_objects(ctx, a).size();
  const double diagonal = std::hypot(scene.workspace.width, scene.workspace.depth);
  if (unresolved == 0) {
    return -(cost + std::max(distance(a[focus], ctx.goal()[focus]), diagonal));
  }
  return -(cost + diagonal * static_cast<double>(unresolved));
}

void backpropagate(SearchTree& tree, NodeId node, double reward) {
  for (std::optional<NodeId> cur = node; cur; cur = tree[*cur].parent) {
    tree[*cur].visits += 1;
    tree[*cur].total_reward += reward;
  }
}

std::vector<Action> solve_stage(const StageContext& ctx, const Arrangement& start,
                                const SearchBudget& budget) {
  if (stage_complete(ctx, start)) return {};

  using Clock = std::chrono::steady_clock;
  const auto began = Clock::now();
  const auto out_of_time = [&] {
    if (!std::isfinite(budget.wall_clock_limit)) return false;
    return std::chrono::duration<double>(Clock::now() - began).count() >
           budget.wall_clock_limit;
  };

  SearchTree tree(start);
  std::mt19937_64 rng(budget.rng_seed);
  for (std::size_t iter = 0; iter < budget.max_iterations; ++iter) {
    if (out_of_time()) throw Error(ErrorCode::kStageTimeout, "stage wall-clock limit reached");
    if (tree[tree.root()].dead) {
      throw Error(ErrorCode::kStageExhausted, "no expandable node remains");
    }

    const NodeId leaf = select(tree, tree.root(), budget.exploration_constant);
    NodeId rollout_from = leaf;
    if (!tree[leaf].expanded && (tree[leaf].visits > 0 || leaf == tree.root())) {
      try {
        rollout_from = expand(ctx, tree, leaf, budget);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kExpansionExhausted) throw;
        tree.mark_dead(leaf);
        continue;
      }
      for (NodeId child : tree[leaf].children) {
        if (stage_complete(ctx, tree[child].arrangement)) return tree.actions_to(child);
      }
    } else if (tree[leaf].expanded) {
      // Expanded, but every child is dead.
      tree.mark_dead(leaf);
      continue;
    }
    backpropagate(tree, rollout_from, simulate(ctx, tree, rollout_from, budget, rng));
  }
  throw Error(ErrorCode::kStageTimeout, "stage iteration budget exhausted");
}

}  // namespace msmcts
