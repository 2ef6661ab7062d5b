#pragma once

#include <string>

#include "msmcts/orchestrator.hpp"
#include "msmcts/scene.hpp"

namespace msmcts {

/// Static SVG 1.1 trace of a plan: workspace outline, start discs (filled),
/// goal discs (outlined), one numbered arrow per action and the first
/// action's pick/place tunnels shaded.
/// Throws Error(kInvalidPlan) if the plan does not validate.
std::string render_svg(const Scene& scene, const Plan& plan);

}  // namespace msmcts
