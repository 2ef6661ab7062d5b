#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "msmcts/orchestrator.hpp"
#include "msmcts/scene.hpp"

namespace msmcts {

// Doubles are written in shortest round-trip form, so load(dump(x)) == x.

nlohmann::json scene_to_json(const Scene& scene);
/// Candidates are rebuilt from workspace, radius and grid_resolution.
/// Throws Error(kParse) on malformed input.
Scene scene_from_json(const nlohmann::json& j);

/// `wall_time` is written only when given, so plans can be compared byte for byte.
nlohmann::json plan_to_json(const Plan& plan, std::optional<double> wall_time = std::nullopt);
Plan plan_from_json(const nlohmann::json& j);

std::string read_file(const std::string& path);
/// Throws Error(kInvalidArgument) if the file cannot be written.
void write_file(const std::string& path, const std::string& contents);

}  // namespace msmcts
