#include "emotive/kinematics.hpp"

#include <algorithm>

namespace emotive {

WheelCommand clamp_command(WheelCommand c) {
  return {std::clamp(c.v_left, -kMaxWheelSpeed, kMaxWheelSpeed),
          std::clamp(c.v_right, -kMaxWheelSpeed, kMaxWheelSpeed)};
}

double linear_speed_px(WheelCommand c) {
  return px_from_m((c.v_left + c.v_right) / 2.0);
}

double angular_rate(WheelCommand c, const RobotGeometry& g) {
  // The px/m factor cancels: (dv * 350) / (W * 350).
  return (c.v_left - c.v_right) / g.track_width_m;
}

Pose step_pose(const Pose& p, WheelCommand c, double dt, const RobotGeometry& g) {
  Pose next;
  next.heading = normalize_angle(p.heading + angular_rate(c, g) * dt);
  next.position = p.position + unit_from_heading(next.heading) * (linear_speed_px(c) * dt);
  return next;
}

}  // namespace emotive
