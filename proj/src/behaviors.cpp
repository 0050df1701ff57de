#include "emotive/behaviors.hpp"

#include <cmath>
#include <numbers>

namespace emotive {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Angle bands, degrees. Forward bands are closed, turn bands half-open.
constexpr double kWideBandDeg = 15.0;
constexpr double kNarrowBandDeg = 10.0;

enum class Branch { kForward, kTurnRight, kTurnLeft };

Branch classify(double theta_deg, double band_deg) {
  if (theta_deg > band_deg) return Branch::kTurnRight;
  if (theta_deg < -band_deg) return Branch::kTurnLeft;
  return Branch::kForward;
}

// Spin-on-the-spot pair (right wheel backwards).
constexpr WheelCommand spin_right(double v) { return {v, -v}; }
constexpr WheelCommand spin_left(double v) { return {-v, v}; }

WheelCommand turn_or_forward(double theta_deg, double band_deg, WheelCommand forward,
                             double turn_speed) {
  switch (classify(theta_deg, band_deg)) {
    case Branch::kTurnRight:
      return spin_right(turn_speed);
    case Branch::kTurnLeft:
      return spin_left(turn_speed);
    case Branch::kForward:
      break;
  }
  return forward;
}

// 10 Hz square wave on the simulation clock: 0 for the first 100 ms, then 1.
int toggle_phase(double t) {
  return static_cast<int>(static_cast<long long>(std::floor(t * 10.0 + 1e-9)) % 2);
}

// Neutral
constexpr double kNeutralStopPx = 80.0;
constexpr double kNeutralForward = 0.1;
constexpr double kNeutralTurn = 0.04;

// Happy
constexpr double kHappySlow = 0.04;
constexpr double kHappyFast = 0.16;
constexpr double kHappyTurn = 0.06;
constexpr double kHappySpinSpeed = 0.16;
constexpr double kHappySpinTriggerPx = 70.0;
constexpr double kHappyRearmPx = 80.0;

// Angry
constexpr double kAngryStopPx = 35.0;
constexpr double kAngryResumePx = 45.0;
constexpr double kAngryPatternPeriodS = 5.0;

// Sad
constexpr double kSadStopPx = 80.0;
constexpr double kSadResumePx = 100.0;
constexpr double kSadSineEntryPx = 100.0;
constexpr double kSadCatchUpPx = 200.0;
constexpr double kSadCatchUpForward = 0.14;
constexpr double kSadCatchUpTurn = 0.032;
constexpr double kSineStartAheadPx = 10.0;
constexpr double kSineEndBehindPx = 30.0;

}  // namespace

std::string_view to_string(BehaviorKind kind) {
  switch (kind) {
    case BehaviorKind::kNeutral:
      return "neutral";
    case BehaviorKind::kHappy:
      return "happy";
    case BehaviorKind::kAngry:
      return "angry";
    case BehaviorKind::kSad:
      return "sad";
  }
  return "unknown";
}

std::optional<BehaviorKind> parse_behavior_kind(std::string_view name) {
  for (auto k : {BehaviorKind::kNeutral, BehaviorKind::kHappy, BehaviorKind::kAngry,
                 BehaviorKind::kSad}) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

WheelCommand apply_leader_stop_gate(WheelCommand cmd, const Observation& obs) {
  return obs.leader_moving ? cmd : kStop;
}

Step<NeutralState> neutral_step(const NeutralState& /*s*/, const Observation& obs) {
  if (obs.d_norm <= kNeutralStopPx) {
    return {kStop, {NeutralMode::kStopped}};
  }
  const WheelCommand cmd = turn_or_forward(obs.theta_deg, kWideBandDeg,
                                           {kNeutralForward, kNeutralForward}, kNeutralTurn);
  return {cmd, {NeutralMode::kFollowing}};
}

double happy_spin_period(const RobotGeometry& g) {
  return kTwoPi / std::abs(angular_rate(spin_right(kHappySpinSpeed), g));
}

Step<HappyState> happy_step(const HappyState& s, const Observation& obs, double t,
                            const ControlParams& params) {
  HappyState next = s;
  // The stop gate zeroes this tick's command when the leader is not moving,
  // so only ticks that will actually turn count toward the spin.
  const double spin_increment =
      obs.leader_moving
          ? std::abs(angular_rate(spin_right(kHappySpinSpeed), params.geometry)) * params.dt
          : 0.0;

  if (next.mode == HappyMode::kSpinning) {
    if (next.spin_accum < kTwoPi) {
      next.spin_accum += spin_increment;
      return {spin_right(kHappySpinSpeed), next};
    }
    next.mode = HappyMode::kOscillating;
    next.rearm = false;
  }

  if (obs.d_norm > kHappyRearmPx) next.rearm = true;

  if (obs.d_norm < kHappySpinTriggerPx && next.rearm) {
    next.mode = HappyMode::kSpinning;
    next.spin_accum = spin_increment;
    return {spin_right(kHappySpinSpeed), next};
  }

  // Antiphase: left high while right low, swapping every 100 ms.
  const WheelCommand wiggle = toggle_phase(t) == 0 ? WheelCommand{kHappyFast, kHappySlow}
                                                   : WheelCommand{kHappySlow, kHappyFast};
  return {turn_or_forward(obs.theta_deg, kWideBandDeg, wiggle, kHappyTurn), next};
}

AngryState make_angry_state(std::uint64_t seed) {
  AngryState s;
  s.rng = Rng64(seed);
  s.pattern_id = s.rng.uniform_int(1, 3);
  return s;
}

WheelCommand angry_pattern_command(int pattern_id, double theta_deg, double t) {
  switch (pattern_id) {
    case 1: {
      // In-phase stop-and-go surge.
      const double v = toggle_phase(t) == 0 ? 0.16 : 0.04;
      return turn_or_forward(theta_deg, kWideBandDeg, {v, v}, 0.06);
    }
    case 2:
      return turn_or_forward(theta_deg, kNarrowBandDeg, {0.18, 0.18}, 0.024);
    default:
      return turn_or_forward(theta_deg, kNarrowBandDeg, {0.14, 0.14}, 0.06);
  }
}

Step<AngryState> angry_step(const AngryState& s, const Observation& obs, double t,
                            const ControlParams& params) {
  AngryState next = s;
  if (next.mode == AngryMode::kPattern && obs.d_norm < kAngryStopPx) {
    next.mode = AngryMode::kStopped;
  } else if (next.mode == AngryMode::kStopped && obs.d_norm >= kAngryResumePx) {
    next.mode = AngryMode::kPattern;
  }
  if (next.mode == AngryMode::kStopped) return {kStop, next};

  const auto ticks_per_pattern = std::llround(kAngryPatternPeriodS / params.dt);
  if (next.pattern_ticks >= ticks_per_pattern) {
    next.pattern_id = next.rng.uniform_int(1, 3);
    next.pattern_ticks = 0;
    ++next.draws;
  }
  ++next.pattern_ticks;
  return {angry_pattern_command(next.pattern_id, obs.theta_deg, t), next};
}

SadSpeeds sad_speed_schedule(double d_norm) {
  if (d_norm < 100.0) return {0.088, 0.008};
  if (d_norm <= 120.0) return {0.08, 0.012};
  return {0.072, 0.016};
}

std::vector<Vec2> generate_sine_waypoints(const Pose& leader, const Pose& follower) {
  const Vec2 start =
      follower.position + unit_from_heading(follower.heading) * kSineStartAheadPx;
  const Vec2 end = leader.position - unit_from_heading(leader.heading) * kSineEndBehindPx;
  const Vec2 baseline = end - start;
  const double length = norm(baseline);
  if (length < 1.0) return {end};

  const Vec2 dir = baseline * (1.0 / length);
  const Vec2 normal{-dir.y, dir.x};  // +90 deg in the pixel frame
  std::vector<Vec2> pts;
  pts.reserve(kSineWaypointCount);
  for (int i = 1; i < kSineWaypointCount; ++i) {
    const double u = static_cast<double>(i) / kSineWaypointCount;
    pts.push_back(start + baseline * u + normal * (kSineAmplitudePx * std::sin(kTwoPi * u)));
  }
  pts.push_back(end);  // sin(2*pi) = 0
  return pts;
}

namespace {

WheelCommand sad_catch_up_command(double theta_deg) {
  return turn_or_forward(theta_deg, kWideBandDeg, {kSadCatchUpForward, kSadCatchUpForward},
                         kSadCatchUpTurn);
}

// Arc toward the waypoint: the outer wheel keeps v_straight.
WheelCommand sad_sine_command(double theta_w_deg, SadSpeeds v) {
  switch (classify(theta_w_deg, kWideBandDeg)) {
    case Branch::kTurnRight:
      return {v.v_straight, v.v_turn};
    case Branch::kTurnLeft:
      return {v.v_turn, v.v_straight};
    case Branch::kForward:
      break;
  }
  return {v.v_straight, v.v_straight};
}

}  // namespace

Step<SadState> sad_step(const SadState& s, const Observation& obs, const Pose& leader,
                        const Pose& follower) {
  SadState next = s;
  if (obs.d_norm < kSadStopPx) {
    next.mode = SadMode::kStopped;
    next.waypoints.clear();
    next.next_idx = 0;
    return {kStop, next};
  }
  if (next.mode == SadMode::kStopped) {
    if (obs.d_norm < kSadResumePx) return {kStop, next};
    next.mode = SadMode::kCatchUp;
  }

  if (next.mode == SadMode::kSine) {
    if (next.next_idx < next.waypoints.size() &&
        distance(follower.position, next.waypoints[next.next_idx]) <= kWaypointReachedPx) {
      ++next.next_idx;
    }
    if (next.next_idx >= next.waypoints.size()) {
      if (obs.d_norm < kSadCatchUpPx) {
        next.waypoints = generate_sine_waypoints(leader, follower);
        next.next_idx = 0;
      } else {
        next.mode = SadMode::kCatchUp;
        next.waypoints.clear();
        next.next_idx = 0;
      }
    }
  }

  if (next.mode == SadMode::kCatchUp) {
    if (obs.d_norm >= kSadSineEntryPx) return {sad_catch_up_command(obs.theta_deg), next};
    next.mode = SadMode::kSine;
    next.waypoints = generate_sine_waypoints(leader, follower);
    next.next_idx = 0;
  }

  const Vec2 target = next.waypoints[next.next_idx];
  const double theta_w = signed_angle_deg(follower.heading, target - follower.position);
  return {sad_sine_command(theta_w, sad_speed_schedule(obs.d_norm)), next};
}

BehaviorState initial_behavior_state(BehaviorKind kind, std::uint64_t seed) {
  switch (kind) {
    case BehaviorKind::kNeutral:
      return NeutralState{};
    case BehaviorKind::kHappy:
      return HappyState{};
    case BehaviorKind::kAngry:
      return make_angry_state(seed);
    case BehaviorKind::kSad:
      return SadState{};
  }
  return NeutralState{};
}

BehaviorKind kind_of(const BehaviorState& state) {
  return static_cast<BehaviorKind>(state.index());
}

std::string state_name(const BehaviorState& state) {
  struct Namer {
    std::string operator()(const NeutralState& s) const {
      return s.mode == NeutralMode::kStopped ? "Stopped" : "Following";
    }
    std::string operator()(const HappyState& s) const {
      return s.mode == HappyMode::kSpinning ? "Spinning" : "Oscillating";
    }
    std::string operator()(const AngryState& s) const {
      if (s.mode == AngryMode::kStopped) return "Stopped";
      return "Pattern" + std::to_string(s.pattern_id);
    }
    std::string operator()(const SadState& s) const {
      switch (s.mode) {
        case SadMode::kCatchUp:
          return "CatchUp";
        case SadMode::kSine:
          return "Sine";
        case SadMode::kStopped:
          break;
      }
      return "Stopped";
    }
  };
  return std::visit(Namer{}, state);
}

Step<BehaviorState> behavior_step(const BehaviorState& state, const FollowerInput& in,
                                  const ControlParams& params) {
  struct Stepper {
    const FollowerInput& in;
    const ControlParams& params;
    Step<BehaviorState> operator()(const NeutralState& s) const {
      auto r = neutral_step(s, in.obs);
      return {r.command, r.state};
    }
    Step<BehaviorState> operator()(const HappyState& s) const {
      auto r = happy_step(s, in.obs, in.t, params);
      return {r.command, r.state};
    }
    Step<BehaviorState> operator()(const AngryState& s) const {
      auto r = angry_step(s, in.obs, in.t, params);
      return {r.command, std::move(r.state)};
    }
    Step<BehaviorState> operator()(const SadState& s) const {
      auto r = sad_step(s, in.obs, in.leader, in.follower);
      return {r.command, std::move(r.state)};
    }
  };
  return std::visit(Stepper{in, params}, state);
}

}  // namespace emotive
