#pragma once

#include <cmath>
#include <numbers>

namespace emotive {

/// Tracker pixels per meter on the arena surface (3.5 px per cm).
inline constexpr double kPxPerMeter = 350.0;

/// Distance of the goal point behind the leader center, in pixels.
inline constexpr double kGoalOffsetPx = 70.0;

/// Pixel-frame vector. x grows right, y grows down (camera image convention).
struct Vec2 {
  double x{0.0};
  double y{0.0};

  constexpr Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  constexpr Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
  constexpr Vec2 operator-() const { return {-x, -y}; }
  constexpr Vec2& operator+=(Vec2 o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  constexpr bool operator==(const Vec2&) const = default;
};

inline double norm(Vec2 v) { return std::hypot(v.x, v.y); }
inline double distance(Vec2 a, Vec2 b) { return norm(b - a); }
constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }

/// Unit vector pointing along `heading` (radians, pixel frame).
inline Vec2 unit_from_heading(double heading) {
  return {std::cos(heading), std::sin(heading)};
}

/// Robot center and orientation in the tracker frame. Heading in (-pi, pi].
struct Pose {
  Vec2 position;
  double heading{0.0};

  bool operator==(const Pose&) const = default;
};

/// What a follower knows about the world on one control step.
struct Observation {
  Vec2 d_vec;          // goal point minus follower center, px
  double d_norm{0.0};  // px
  double theta_deg{0.0};
  bool leader_moving{true};
};

inline constexpr double rad_to_deg(double r) { return r * 180.0 / std::numbers::pi; }
inline constexpr double deg_to_rad(double d) { return d * std::numbers::pi / 180.0; }

/// Wraps an angle into (-pi, pi]. Throws std::invalid_argument for NaN/inf.
double normalize_angle(double radians);

/// Same wrap in degrees: (-180, 180].
double normalize_angle_deg(double degrees);

/// Goal point kGoalOffsetPx behind the leader along its reversed heading.
Vec2 compute_goal_point(const Pose& leader);

/// Signed angle in degrees from `heading` to `target_vec`, in (-180, 180].
/// Positive means the target lies on the side reached by increasing the
/// heading, which under the kinematics convention is a right turn. A zero
/// vector yields 0.
double signed_angle_deg(double heading, Vec2 target_vec);

Observation compute_observation(const Pose& leader, const Pose& follower, bool leader_moving);

constexpr double px_from_m(double meters) { return meters * kPxPerMeter; }
constexpr double m_from_px(double px) { return px / kPxPerMeter; }

}  // namespace emotive
