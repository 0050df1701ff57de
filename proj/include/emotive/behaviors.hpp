#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "emotive/geometry.hpp"
#include "emotive/kinematics.hpp"
#include "emotive/rng.hpp"

namespace emotive {

enum class BehaviorKind { kNeutral, kHappy, kAngry, kSad };

std::string_view to_string(BehaviorKind kind);
std::optional<BehaviorKind> parse_behavior_kind(std::string_view name);

/// Per-tick context shared by all controllers.
struct ControlParams {
  double dt{0.01};  // physics period, s
  RobotGeometry geometry;
};

/// Result of one controller step: the command to emit and the successor state.
template <class State>
struct Step {
  WheelCommand command;
  State state;
};

/// Forces a stop whenever the leader is not moving. Applied after every
/// behavior step.
WheelCommand apply_leader_stop_gate(WheelCommand cmd, const Observation& obs);

// ---------------------------------------------------------------------------
// Neutral: stop inside 80 px, otherwise turn toward the goal or drive at 0.1.

enum class NeutralMode { kStopped, kFollowing };

struct NeutralState {
  NeutralMode mode{NeutralMode::kFollowing};
  bool operator==(const NeutralState&) const = default;
};

Step<NeutralState> neutral_step(const NeutralState& s, const Observation& obs);

// ---------------------------------------------------------------------------
// Happy: antiphase 0.04/0.16 wheel oscillation at 10 Hz, plus a full spin on
// the spot when it gets within 70 px. A spin is re-armed once the follower
// has dropped back beyond 80 px.

enum class HappyMode { kOscillating, kSpinning };

struct HappyState {
  HappyMode mode{HappyMode::kOscillating};
  double spin_accum{0.0};  // rad turned in the current spin
  bool rearm{true};
  bool operator==(const HappyState&) const = default;
};

Step<HappyState> happy_step(const HappyState& s, const Observation& obs, double t,
                            const ControlParams& params);

/// Duration of one happy spin in closed form: 2*pi / omega_spin.
double happy_spin_period(const RobotGeometry& g);

// ---------------------------------------------------------------------------
// Angry: tailgates to 35 px (resume at 45 px) and redraws one of three
// driving patterns every 5 s of time spent in Pattern mode.

enum class AngryMode { kStopped, kPattern };

struct AngryState {
  AngryMode mode{AngryMode::kPattern};
  int pattern_id{1};
  std::int64_t pattern_ticks{0};  // Pattern-mode ticks since the last draw
  std::uint64_t draws{0};         // boundary redraws so far (initial draw excluded)
  Rng64 rng;

  double pattern_since(double dt) const { return static_cast<double>(pattern_ticks) * dt; }
  bool operator==(const AngryState&) const = default;
};

/// Seeds the RNG and draws the initial pattern.
AngryState make_angry_state(std::uint64_t seed);

Step<AngryState> angry_step(const AngryState& s, const Observation& obs, double t,
                            const ControlParams& params);

/// Command for a given pattern, ignoring distance and mode.
WheelCommand angry_pattern_command(int pattern_id, double theta_deg, double t);

// ---------------------------------------------------------------------------
// Sad: lags behind along a sine-shaped path of five waypoints, with a faster
// catch-up mode beyond 200 px.

enum class SadMode { kCatchUp, kSine, kStopped };

struct SadSpeeds {
  double v_straight;
  double v_turn;
  bool operator==(const SadSpeeds&) const = default;
};

SadSpeeds sad_speed_schedule(double d_norm);

inline constexpr int kSineWaypointCount = 5;
inline constexpr double kSineAmplitudePx = 20.0;
inline constexpr double kWaypointReachedPx = 10.0;

/// Five points along one sine period between 10 px in front of the follower
/// and 30 px behind the leader. The last point lies on the baseline end.
std::vector<Vec2> generate_sine_waypoints(const Pose& leader, const Pose& follower);

struct SadState {
  SadMode mode{SadMode::kCatchUp};
  std::vector<Vec2> waypoints;
  std::size_t next_idx{0};
  bool operator==(const SadState&) const = default;
};

Step<SadState> sad_step(const SadState& s, const Observation& obs, const Pose& leader,
                        const Pose& follower);

// ---------------------------------------------------------------------------

using BehaviorState = std::variant<NeutralState, HappyState, AngryState, SadState>;

BehaviorState initial_behavior_state(BehaviorKind kind, std::uint64_t seed);
BehaviorKind kind_of(const BehaviorState& state);

/// Short label of the active mode, e.g. "Following", "Spinning", "Pattern2".
std::string state_name(const BehaviorState& state);

/// Everything a controller sees on one tick. Poses are tracker poses.
struct FollowerInput {
  Observation obs;
  Pose leader;
  Pose follower;
  double t{0.0};
};

/// Dispatches to the active controller. The returned command is pre-gate.
Step<BehaviorState> behavior_step(const BehaviorState& state, const FollowerInput& in,
                                  const ControlParams& params);

}  // namespace emotive
