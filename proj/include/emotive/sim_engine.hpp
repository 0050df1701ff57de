#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "emotive/behaviors.hpp"
#include "emotive/geometry.hpp"
#include "emotive/leader_control.hpp"
#include "emotive/path.hpp"
#include "emotive/rng.hpp"
#include "emotive/telemetry.hpp"
#include "emotive/trial_config.hpp"

namespace emotive {

/// What the overhead tracker reports: integer-pixel positions, raw headings.
struct TrackedFrame {
  Pose leader;
  Pose follower;
  double t{0.0};
  bool operator==(const TrackedFrame&) const = default;
};

inline constexpr std::size_t kTrackerHistoryLength = 8;

struct World {
  std::shared_ptr<const TrialConfig> config;
  std::int64_t ticks{0};
  Pose leader;
  Pose follower;
  BehaviorState behavior_state;
  std::vector<TrackedFrame> tracker_history;  // newest at the back, bounded
  Observation last_observation;
  LapProgress lap;
  Rng64 jitter_rng;

  double sim_time() const { return static_cast<double>(ticks) * config->dt; }
  BehaviorKind behavior() const { return config->behavior; }
};

/// Leader at the path start facing checkpoint 1; follower 100 px behind the
/// goal point (170 px behind the leader) with the same heading.
World make_world(const TrialConfig& cfg);

/// Explicit start poses, for scenario tests.
World make_world(const TrialConfig& cfg, const Pose& leader, const Pose& follower);

/// Rounds positions half away from zero after clamping to the arena.
TrackedFrame tracker_sample(const World& w);

/// True when tick index `tick` is the first physics tick of a sampling period
/// at `rate_hz`. Works for rates that do not divide the physics rate: at 30 Hz
/// on 100 Hz physics, samples are 4, 3, 3 ticks apart (every third one exactly
/// 100 ms).
bool is_sample_tick(std::int64_t tick, int rate_hz, int physics_hz);

/// False iff the goal point of the leader moved less than 1 px over the
/// trailing ~100 ms of frames. Short histories count as moving.
bool leader_moving(std::span<const TrackedFrame> history, int tracker_hz = 30);

struct TickOutcome {
  World world;
  TickRecord record;          // full precision; quantize before logging
  WheelCommand raw_command;   // behavior output before the stop gate
  bool lap_completed{false};
};

/// Advances the world by exactly one dt.
TickOutcome tick(World w, KeySet keys);

using KeySource = std::function<KeySet(double t)>;

/// Runs one trial until the leader completes a lap or max_t elapses. Records
/// in the returned log are quantized to the logged precision; if `sink` is
/// given they are streamed to it as well.
TrialLog run_trial(const TrialConfig& cfg, const KeySource& keys, double max_t,
                   LogWriter* sink = nullptr, const std::string& created_tag = "headless");

TrialLog run_trial(const TrialConfig& cfg, const LeaderScript& script, double max_t,
                   LogWriter* sink = nullptr, const std::string& created_tag = "headless");

}  // namespace emotive
