#pragma once

#include <utility>
#include <vector>

#include "msmcts/scene.hpp"

namespace msmcts {

/// Edge (blocked, blocker): `blocker`'s goal obstructs placing `blocked` at
/// its goal, so `blocker` must reach its goal after `blocked`.
struct DependencyGraph {
  std::size_t n = 0;
  std::vector<std::pair<ObjectId, ObjectId>> edges;

  bool has_edge(ObjectId from, ObjectId to) const;
};

/// Order in which objects are fixed at their goals, one stage each.
struct StageOrder {
  std::vector<ObjectId> order;
};

/// Pairwise test over goal placements, ignoring every other object.
DependencyGraph build_dependency_graph(const Scene& scene);

/// Kahn topological sort; among ready objects the deepest goal (largest y)
/// goes first, ties to the smaller id. Throws Error(kCycleDetected).
StageOrder stage_order(const DependencyGraph& g, const Scene& scene);

}  // namespace msmcts
