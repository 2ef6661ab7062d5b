#include "msmcts/scene.hpp"

#include <cmath>
#include <random>
#include <string>

#include "msmcts/error.hpp"

namespace msmcts {

std::vector<Point> candidate_grid(const Workspace& workspace, double object_radius,
                                  double resolution) {
  if (!(resolution > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "grid resolution must be positive");
  }
  const auto axis_count = [&](double extent) -> long {
    const double span = extent - 2.0 * object_radius;
    if (span < -kEps) return 0;
    return static_cast<long>(std::floor(std::max(span, 0.0) / resolution + kEps)) + 1;
  };
  const long nx = axis_count(workspace.width);
  const long ny = axis_count(workspace.depth);
  if (nx <= 0 || ny <= 0) {
    throw Error(ErrorCode::kEmptyGrid, "no placement candidate fits the workspace");
  }
  std::vector<Point> out;
  out.reserve(static_cast<std::size_t>(nx * ny));
  for (long j = 0; j < ny; ++j) {
    for (long i = 0; i < nx; ++i) {
      out.push_back({object_radius + static_cast<double>(i) * resolution,
                     object_radius + static_cast<double>(j) * resolution});
    }
  }
  return out;
}

namespace {

bool sample_arrangement(const std::vector<Point>& grid, std::size_t n, double min_sep,
                        std::mt19937_64& rng, int max_rounds, Arrangement& out) {
  std::uniform_int_distribution<std::size_t> pick(0, grid.size() - 1);
  for (int round = 0; round < max_rounds; ++round) {
    out.clear();
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      const Point p = grid[pick(rng)];
      for (const Point& q : out) {
        if (distance(p, q) < min_sep - kEps) {
          ok = false;
          break;
        }
      }
      out.push_back(p);
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace

Scene generate_scene(const SceneConfig& config) {
  if (config.n_objects < 1) {
    throw Error(ErrorCode::kInvalidArgument, "scene needs at least one object");
  }
  if (config.min_center_separation < 2.0 * config.object_radius - kEps) {
    throw Error(ErrorCode::kInvalidArgument,
                "minimum center separation must be at least one object diameter");
  }
  Scene scene;
  scene.workspace = config.workspace;
  scene.object_radius = config.object_radius;
  scene.tunnel_width = config.tunnel_width;
  scene.grid_resolution = config.grid_resolution;
  scene.robot_home =
      config.has_robot_home ? config.robot_home : Point{config.workspace.width / 2.0, -3.0};
  scene.candidates =
      candidate_grid(config.workspace, config.object_radius, config.grid_resolution);

  std::mt19937_64 rng(config.rng_seed);
  if (!sample_arrangement(scene.candidates, config.n_objects, config.min_center_separation,
                          rng, config.max_rejection_rounds, scene.start) ||
      !sample_arrangement(scene.candidates, config.n_objects, config.min_center_separation,
                          rng, config.max_rejection_rounds, scene.goal)) {
    throw Error(ErrorCode::kGenerationFailure,
                "could not place " + std::to_string(config.n_objects) +
                    " objects within the rejection budget");
  }
  return scene;
}

bool arrangement_valid(const Arrangement& a, const Scene& scene) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!std::isfinite(a[i].x) || !std::isfinite(a[i].y)) return false;
    const Disc di = scene.disc_at(a[i]);
    if (!disc_in_workspace(di, scene.workspace)) return false;
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      if (discs_overlap(di, scene.disc_at(a[j]))) return false;
    }
  }
  return true;
}

void check_scene(const Scene& scene) {
  if (!(scene.object_radius > 0.0) || !(scene.tunnel_width > 0.0) ||
      !(scene.workspace.width > 0.0) || !(scene.workspace.depth > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "scene dimensions must be positive");
  }
  if (scene.start.size() != scene.goal.size()) {
    throw Error(ErrorCode::kInvalidArgument, "start and goal sizes differ");
  }
  if (!(scene.robot_home.y < 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "robot home must sit in front of the opening");
  }
  if (!arrangement_valid(scene.start, scene)) {
    throw Error(ErrorCode::kInvalidArgument, "start arrangement is invalid");
  }
  if (!arrangement_valid(scene.goal, scene)) {
    throw Error(ErrorCode::kInvalidArgument, "goal arrangement is invalid");
  }
}

}  // namespace msmcts
