#include "msmcts/motion.hpp"

#include "msmcts/error.hpp"

namespace msmcts {

SweptVolume swept_volume(const Scene& scene, const Action& action) {
  if (near(action.from, action.to)) {
    throw Error(ErrorCode::kInvalidArgument, "relocation must change the object's region");
  }
  return SweptVolume{scene.tunnel(action.from), scene.tunnel(action.to)};
}

bool action_valid(const Scene& scene, const Arrangement& a, const Action& action) {
  if (action.object >= a.size()) return false;
  if (!near(a[action.object], action.from, 1e-6)) return false;
  if (near(action.from, action.to)) return false;
  if (near(action.from, scene.robot_home) || near(action.to, scene.robot_home)) return false;

  const Disc dest = scene.disc_at(action.to);
  if (!disc_in_workspace(dest, scene.workspace)) return false;

  const SweptVolume sweep = swept_volume(scene, action);
  for (ObjectId o = 0; o < a.size(); ++o) {
    if (o == action.object) continue;
    const Disc other = scene.disc_at(a[o]);
    if (tunnel_intersects_disc(sweep.pick, other) || tunnel_intersects_disc(sweep.place, other) ||
        discs_overlap(dest, other)) {
      return false;
    }
  }
  return true;
}

std::vector<ObjectId> collision_objs(const Scene& scene, const Arrangement& a,
                                     std::span<const ObjectId> candidates, const Tunnel& t) {
  std::vector<ObjectId> hits;
  for (ObjectId o : candidates) {
    if (tunnel_intersects_disc(t, scene.disc_at(a[o]))) hits.push_back(o);
  }
  return hits;
}

Arrangement apply_action(Arrangement a, const Action& action) {
  a[action.object] = action.to;
  return a;
}

}  // namespace msmcts
