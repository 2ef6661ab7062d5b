#include "msmcts/geometry.hpp"

#include <algorithm>
#include <array>

#include "msmcts/error.hpp"

namespace msmcts {

Tunnel tunnel_to(Point target, Point anchor, double object_radius, double tunnel_width) {
  const Point delta = target - anchor;
  const double dist = norm(delta);
  if (dist <= kEps) {
    throw Error(ErrorCode::kDegenerateTarget, "tunnel target coincides with its anchor");
  }
  // atan2 gives the signed version of acos(i . delta / |delta|).
  return Tunnel{anchor, dist + object_radius, tunnel_width, std::atan2(delta.y, delta.x)};
}

namespace {

struct Interval {
  double lo;
  double hi;
};

// Rectangle corners and disc center expressed in the tunnel's local frame,
// where the rectangle is [0, length] x [-width/2, width/2].
Interval project(const std::array<Point, 4>& corners, Point axis) {
  Interval out{dot(corners[0], axis), dot(corners[0], axis)};
  for (const Point& c : corners) {
    const double p = dot(c, axis);
    out.lo = std::min(out.lo, p);
    out.hi = std::max(out.hi, p);
  }
  return out;
}

bool separated_on(const std::array<Point, 4>& corners, Point center, double radius, Point axis) {
  const Interval rect = project(corners, axis);
  const double c = dot(center, axis);
  return c + radius < rect.lo - kEps || c - radius > rect.hi + kEps;
}

}  // namespace

bool tunnel_intersects_disc(const Tunnel& t, const Disc& d) {
  const Point rel = d.center - t.anchor();
  const Point local{dot(rel, t.axis()), dot(rel, t.normal())};
  const double hw = 0.5 * t.width();
  const double len = t.length();
  const std::array<Point, 4> corners{Point{0.0, -hw}, Point{len, -hw}, Point{len, hw},
                                     Point{0.0, hw}};

  if (separated_on(corners, local, d.radius, Point{1.0, 0.0})) return false;
  if (separated_on(corners, local, d.radius, Point{0.0, 1.0})) return false;

  // Third candidate axis: from the nearest corner towards the disc center.
  const Point* nearest = &corners[0];
  for (const Point& c : corners) {
    if (distance(c, local) < distance(*nearest, local)) nearest = &c;
  }
  const Point to_center = local - *nearest;
  const double gap = norm(to_center);
  if (gap <= kEps) return true;  // center sits on a corner
  return !separated_on(corners, local, d.radius, to_center * (1.0 / gap));
}

bool discs_overlap(const Disc& a, const Disc& b) {
  return distance(a.center, b.center) < a.radius + b.radius - kEps;
}

bool disc_in_workspace(const Disc& d, const Workspace& w) {
  return d.center.x - d.radius >= -kEps && d.center.x + d.radius <= w.width + kEps &&
         d.center.y - d.radius >= -kEps && d.center.y + d.radius <= w.depth + kEps;
}

}  // namespace msmcts
