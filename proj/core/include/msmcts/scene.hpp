#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "msmcts/geometry.hpp"

namespace msmcts {

/// 0-based object label; indexes into an Arrangement.
using ObjectId = std::size_t;

/// Entry i is the region (footprint center) of object i.
using Arrangement = std::vector<Point>;

struct Scene {
  Workspace workspace{20.0, 20.0};
  double object_radius = 1.0;
  Point robot_home{10.0, -3.0};
  double tunnel_width = 4.0;
  double grid_resolution = 1.0;
  Arrangement start;
  Arrangement goal;
  std::vector<Point> candidates;

  std::size_t object_count() const { return start.size(); }
  Disc disc_at(Point p) const { return Disc{p, object_radius}; }
  Tunnel tunnel(Point target) const {
    return tunnel_to(target, robot_home, object_radius, tunnel_width);
  }
};

struct SceneConfig {
  Workspace workspace{20.0, 20.0};
  std::size_t n_objects = 4;
  double object_radius = 1.0;
  double min_center_separation = 4.0;
  double tunnel_width = 4.0;
  double grid_resolution = 1.0;
  std::uint64_t rng_seed = 0;
  /// Defaults to (width / 2, -3) when unset.
  bool has_robot_home = false;
  Point robot_home{};
  int max_rejection_rounds = 10000;
};

/// Grid points (pitch `resolution`, starting at (r, r)) whose disc of radius r
/// fits inside the workspace, row-major with x varying fastest.
/// Throws Error(kEmptyGrid) when nothing fits.
std::vector<Point> candidate_grid(const Workspace& workspace, double object_radius,
                                  double resolution);

/// Random start/goal pair drawn by rejection sampling over the candidate grid.
/// Pure function of `config`.
Scene generate_scene(const SceneConfig& config);

bool arrangement_valid(const Arrangement& a, const Scene& scene);

/// Checks the Scene invariants (both arrangements valid, equal sizes, home
/// in front of the opening). Throws Error(kInvalidArgument) on violation.
void check_scene(const Scene& scene);

}  // namespace msmcts
