#pragma once

#include <cmath>

namespace msmcts {

/// Absolute tolerance for every floating equality in the library.
inline constexpr double kEps = 1e-9;

/// Workspace frame: origin at the front-left corner of the ground surface,
/// +x to the right, +y into the workspace. The opening lies along y = 0.
struct Point {
  double x = 0.0;
  double y = 0.0;

  friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend Point operator*(Point a, double s) { return {a.x * s, a.y * s}; }
  friend bool operator==(Point a, Point b) = default;
};

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double distance(Point a, Point b) { return norm(a - b); }
inline bool near(Point a, Point b, double tol = kEps) {
  return std::abs(a.x - b.x) <= tol && std::abs(a.y - b.y) <= tol;
}

struct Disc {
  Point center;
  double radius = 0.0;
};

/// Rectangle swept by one straight gripper motion. It starts at `anchor`,
/// extends `length` along `angle` (radians from +x, in (-pi, pi]) and is
/// `width` wide, centered on that axis.
class Tunnel {
 public:
  Tunnel() = default;
  Tunnel(Point anchor, double length, double width, double angle)
      : anchor_(anchor),
        length_(length),
        width_(width),
        angle_(angle),
        axis_{std::cos(angle), std::sin(angle)} {}

  Point anchor() const { return anchor_; }
  double length() const { return length_; }
  double width() const { return width_; }
  double angle() const { return angle_; }
  Point axis() const { return axis_; }
  Point normal() const { return {-axis_.y, axis_.x}; }

 private:
  Point anchor_{};
  double length_ = 0.0;
  double width_ = 0.0;
  double angle_ = 0.0;
  Point axis_{1.0, 0.0};
};

struct Workspace {
  double width = 0.0;
  double depth = 0.0;
};

/// Tunnel from `anchor` that reaches just past the far edge of an object
/// of radius `object_radius` centered at `target`.
/// Throws Error(kDegenerateTarget) when target coincides with anchor.
Tunnel tunnel_to(Point target, Point anchor, double object_radius, double tunnel_width);

/// Closed rectangle vs closed disc; touching counts as intersecting.
/// Decided with the separating axis theorem.
bool tunnel_intersects_disc(const Tunnel& t, const Disc& d);

/// Strict overlap; tangent discs do not overlap.
bool discs_overlap(const Disc& a, const Disc& b);

/// True iff the disc lies inside [0, width] x [0, depth], touching allowed.
bool disc_in_workspace(const Disc& d, const Workspace& w);

}  // namespace msmcts
