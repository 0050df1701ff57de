#pragma once

#include "emotive/geometry.hpp"

namespace emotive {

/// Hardware wheel speed limit, m/s.
inline constexpr double kMaxWheelSpeed = 0.2;

/// Left/right wheel linear speeds in m/s.
struct WheelCommand {
  double v_left{0.0};
  double v_right{0.0};

  bool operator==(const WheelCommand&) const = default;
  bool is_stop() const { return v_left == 0.0 && v_right == 0.0; }
};

inline constexpr WheelCommand kStop{0.0, 0.0};

struct RobotGeometry {
  double track_width_m{0.094};  // wheel separation
  double body_length_m{0.110};
  double body_width_m{0.112};
  bool operator==(const RobotGeometry&) const = default;
};

/// Clamps each wheel independently to [-kMaxWheelSpeed, kMaxWheelSpeed].
WheelCommand clamp_command(WheelCommand c);

/// Forward speed in px/s.
double linear_speed_px(WheelCommand c);

/// Turn rate in rad/s. Positive when the left wheel is faster, which
/// increases the heading (a clockwise, right-hand turn on screen).
double angular_rate(WheelCommand c, const RobotGeometry& g);

/// Semi-implicit Euler: heading first, then translate along the new heading.
Pose step_pose(const Pose& p, WheelCommand c, double dt, const RobotGeometry& g);

}  // namespace emotive
