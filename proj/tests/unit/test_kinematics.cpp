#include "emotive/kinematics.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

namespace emotive {
namespace {

const RobotGeometry kGeom{};

TEST(ClampCommand, Examples) {
  EXPECT_EQ(clamp_command({0.18, 0.18}), (WheelCommand{0.18, 0.18}));
  EXPECT_EQ(clamp_command({0.25, -0.3}), (WheelCommand{0.2, -0.2}));
  EXPECT_EQ(clamp_command({0.0, 0.0}), kStop);
}

TEST(ClampCommand, BoundsAndIdempotence) {
  std::mt19937_64 gen(3);
  std::uniform_real_distribution<double> v(-1.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const WheelCommand c = clamp_command({v(gen), v(gen)});
    EXPECT_LE(std::abs(c.v_left), kMaxWheelSpeed);
    EXPECT_LE(std::abs(c.v_right), kMaxWheelSpeed);
    EXPECT_EQ(clamp_command(c), c);
  }
}

TEST(StepPose, StraightLine) {
  const Pose p = step_pose({{0, 0}, 0.0}, {0.1, 0.1}, 0.1, kGeom);
  EXPECT_NEAR(p.position.x, 3.5, 1e-12);
  EXPECT_NEAR(p.position.y, 0.0, 1e-12);
  EXPECT_EQ(p.heading, 0.0);
}

TEST(StepPose, SpinRateAndPeriod) {
  const double w = angular_rate({0.16, -0.16}, kGeom);
  EXPECT_NEAR(w, 3.404255319148936, 1e-12);
  EXPECT_NEAR(2.0 * std::numbers::pi / w, 1.8456856839840035, 1e-12);
  EXPECT_EQ(linear_speed_px({0.16, -0.16}), 0.0);
}

TEST(StepPose, NeutralTurnRate) {
  const double w = angular_rate({0.04, -0.04}, kGeom);
  EXPECT_NEAR(w, 0.851063829787234, 1e-12);
  EXPECT_NEAR(w * 180.0 / std::numbers::pi, 48.7624, 1e-4);
}

TEST(StepPose, LeftFasterTurnsRight) {
  // Positive omega increases the heading: clockwise on screen (y down).
  const Pose p = step_pose({{0, 0}, 0.0}, {0.08, 0.03}, 0.01, kGeom);
  EXPECT_GT(p.heading, 0.0);
  EXPECT_GT(p.position.y, 0.0);
}

TEST(StepPose, Invariants) {
  std::mt19937_64 gen(11);
  std::uniform_real_distribution<double> pos(-500.0, 500.0);
  std::uniform_real_distribution<double> ang(-3.1, 3.1);
  std::uniform_real_distribution<double> v(-0.2, 0.2);
  for (int i = 0; i < 1000; ++i) {
    const Pose p{{pos(gen), pos(gen)}, ang(gen)};
    const double s = v(gen);

    const Pose straight = step_pose(p, {s, s}, 0.01, kGeom);
    EXPECT_EQ(straight.heading, p.heading);
    EXPECT_NEAR(distance(p.position, straight.position), std::abs(px_from_m(s)) * 0.01, 1e-9);

    const Pose spin = step_pose(p, {s, -s}, 0.01, kGeom);
    EXPECT_EQ(spin.position, p.position);

    const WheelCommand c{v(gen), v(gen)};
    EXPECT_EQ(step_pose(p, c, 0.01, kGeom), step_pose(p, c, 0.01, kGeom));
  }
}

}  // namespace
}  // namespace emotive
