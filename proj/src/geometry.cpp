#include "emotive/geometry.hpp"

#include <stdexcept>

namespace emotive {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace

double normalize_angle(double radians) {
  if (!std::isfinite(radians)) {
    throw std::invalid_argument("normalize_angle: non-finite angle");
  }
  double a = std::remainder(radians, kTwoPi);  // [-pi, pi]
  if (a <= -kPi) a += kTwoPi;
  return a;
}

double normalize_angle_deg(double degrees) {
  if (!std::isfinite(degrees)) {
    throw std::invalid_argument("normalize_angle_deg: non-finite angle");
  }
  double a = std::remainder(degrees, 360.0);
  if (a <= -180.0) a += 360.0;
  return a;
}

Vec2 compute_goal_point(const Pose& leader) {
  return leader.position - unit_from_heading(leader.heading) * kGoalOffsetPx;
}

double signed_angle_deg(double heading, Vec2 target_vec) {
  if (target_vec.x == 0.0 && target_vec.y == 0.0) return 0.0;
  const Vec2 o = unit_from_heading(heading);
  const double deg = rad_to_deg(std::atan2(cross(o, target_vec), dot(o, target_vec)));
  // atan2 may return exactly -pi for a vector straight behind.
  return deg <= -180.0 ? deg + 360.0 : deg;
}

Observation compute_observation(const Pose& leader, const Pose& follower, bool leader_moving) {
  Observation obs;
  obs.d_vec = compute_goal_point(leader) - follower.position;
  obs.d_norm = norm(obs.d_vec);
  obs.theta_deg = signed_angle_deg(follower.heading, obs.d_vec);
  obs.leader_moving = leader_moving;
  return obs;
}

}  // namespace emotive
