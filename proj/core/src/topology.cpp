#include "msmcts/topology.hpp"

#include <algorithm>

#include "msmcts/error.hpp"

namespace msmcts {

bool DependencyGraph::has_edge(ObjectId from, ObjectId to) const {
  return std::find(edges.begin(), edges.end(), std::pair{from, to}) != edges.end();
}

DependencyGraph build_dependency_graph(const Scene& scene) {
  DependencyGraph g;
  g.n = scene.goal.size();
  for (ObjectId j = 0; j < g.n; ++j) {
    const Tunnel goal_tunnel = scene.tunnel(scene.goal[j]);
    const Disc goal_j = scene.disc_at(scene.goal[j]);
    for (ObjectId i = 0; i < g.n; ++i) {
      if (i == j) continue;
      const Disc goal_i = scene.disc_at(scene.goal[i]);
      if (tunnel_intersects_disc(goal_tunnel, goal_i) || discs_overlap(goal_i, goal_j)) {
        g.edges.emplace_back(j, i);
      }
    }
  }
  return g;
}

StageOrder stage_order(const DependencyGraph& g, const Scene& scene) {
  std::vector<std::size_t> indegree(g.n, 0);
  std::vector<std::vector<ObjectId>> out(g.n);
  for (const auto& [from, to] : g.edges) {
    out[from].push_back(to);
    ++indegree[to];
  }

  // Deeper goal first; ids break ties.
  const auto before = [&](ObjectId a, ObjectId b) {
    const double ya = scene.goal[a].y;
    const double yb = scene.goal[b].y;
    if (std::abs(ya - yb) > kEps) return ya > yb;
    return a < b;
  };

  std::vector<ObjectId> ready;
  for (ObjectId o = 0; o < g.n; ++o) {
    if (indegree[o] == 0) ready.push_back(o);
  }

  StageOrder result;
  result.order.reserve(g.n);
  while (!ready.empty()) {
    const auto it = std::min_element(ready.begin(), ready.end(), before);
    const ObjectId next = *it;
    ready.erase(it);
    result.order.push_back(next);
    for (ObjectId succ : out[next]) {
      if (--indegree[succ] == 0) ready.push_back(succ);
    }
  }
  if (result.order.size() != g.n) {
    throw Error(ErrorCode::kCycleDetected, "goal dependency graph contains a cycle");
  }
  return result;
}

}  // namespace msmcts
