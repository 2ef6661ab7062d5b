#pragma once

#include <span>
#include <vector>

#include "msmcts/scene.hpp"

namespace msmcts {

/// One pick-and-place relocation.
struct Action {
  ObjectId object = 0;
  Point from;
  Point to;

  double displacement() const { return distance(from, to); }
  friend bool operator==(const Action&, const Action&) = default;
};

/// The robot returns home between pick and place, so a relocation sweeps
/// exactly two home-anchored tunnels.
struct SweptVolume {
  Tunnel pick;
  Tunnel place;
};

/// Throws Error(kInvalidArgument) if from == to; propagates kDegenerateTarget.
SweptVolume swept_volume(const Scene& scene, const Action& action);

/// Collision constraint for one relocation: neither tunnel touches any disc
/// but the moved one, and the destination disc is in-bounds and overlaps no
/// other disc. Also false if `action.from` is not where the object sits.
bool action_valid(const Scene& scene, const Arrangement& a, const Action& action);

/// Members of `candidates` whose current disc intersects `t`, in input order.
std::vector<ObjectId> collision_objs(const Scene& scene, const Arrangement& a,
                                     std::span<const ObjectId> candidates, const Tunnel& t);

/// Arrangement after `action`; does not check validity.
Arrangement apply_action(Arrangement a, const Action& action);

}  // namespace msmcts
