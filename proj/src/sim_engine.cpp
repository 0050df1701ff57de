#include "emotive/sim_engine.hpp"

#include <algorithm>
#include <cmath>

#include "emotive/json_number.hpp"

namespace emotive {

namespace {

// Follower start distance behind the goal point, px.
constexpr double kStartGapPx = 100.0;
constexpr double kLeaderStopThresholdPx = 1.0;
constexpr double kMotionWindowS = 0.1;
// Separates the jitter stream from the behavior stream for the same seed.
constexpr std::uint64_t kJitterStreamSalt = 0x6A09E667F3BCC909ULL;

Pose clamp_to_arena(Pose p, const TrialConfig& cfg) {
  p.position.x = std::clamp(p.position.x, 0.0, cfg.arena_width);
  p.position.y = std::clamp(p.position.y, 0.0, cfg.arena_height);
  return p;
}

Pose quantize_pose(const Pose& p, const TrialConfig& cfg) {
  const Pose c = clamp_to_arena(p, cfg);
  return {{std::round(c.position.x), std::round(c.position.y)}, c.heading};
}

double jitter(Rng64& rng) { return static_cast<double>(rng.uniform_int(-1, 1)); }

}  // namespace

World make_world(const TrialConfig& cfg, const Pose& leader, const Pose& follower) {
  validate(cfg);
  World w;
  w.config = std::make_shared<const TrialConfig>(cfg);
  w.leader = clamp_to_arena({leader.position, normalize_angle(leader.heading)}, cfg);
  w.follower = clamp_to_arena({follower.position, normalize_angle(follower.heading)}, cfg);
  w.behavior_state = initial_behavior_state(cfg.behavior, cfg.seed);
  w.last_observation = compute_observation(w.leader, w.follower, true);
  w.lap = start_lap_progress(cfg.path, w.leader.position);
  w.jitter_rng = Rng64(cfg.seed ^ kJitterStreamSalt);
  return w;
}

World make_world(const TrialConfig& cfg) {
  const double heading = cfg.path.start_heading();
  const Pose leader{cfg.path.checkpoints.front(), heading};
  const Pose follower{
      leader.position - unit_from_heading(heading) * (kGoalOffsetPx + kStartGapPx), heading};
  return make_world(cfg, leader, follower);
}

TrackedFrame tracker_sample(const World& w) {
  return {quantize_pose(w.leader, *w.config), quantize_pose(w.follower, *w.config),
          w.sim_time()};
}

bool is_sample_tick(std::int64_t tick, int rate_hz, int physics_hz) {
  if (tick == 0) return true;
  return (tick * rate_hz) / physics_hz != ((tick - 1) * rate_hz) / physics_hz;
}

bool leader_moving(std::span<const TrackedFrame> history, int tracker_hz) {
  const auto lookback =
      static_cast<std::size_t>(std::max(1L, std::lround(kMotionWindowS * tracker_hz)));
  if (history.size() < lookback + 1) return true;
  const Vec2 now = compute_goal_point(history.back().leader);
  const Vec2 before = compute_goal_point(history[history.size() - 1 - lookback].leader);
  return distance(now, before) >= kLeaderStopThresholdPx;
}

TickOutcome tick(World w, KeySet keys) {
  const TrialConfig& cfg = *w.config;
  const double t_start = w.sim_time();
  const double t_end = static_cast<double>(w.ticks + 1) * cfg.dt;

  // 1. Leader.
  const WheelCommand leader_cmd = keys_to_command(keys.normalized(), cfg.leader_speeds);
  w.leader = clamp_to_arena(step_pose(w.leader, leader_cmd, cfg.dt, cfg.geometry), cfg);

  // 2. Tracker.
  if (is_sample_tick(w.ticks, cfg.tracker_hz, cfg.physics_hz())) {
    TrackedFrame frame = tracker_sample(w);
    if (cfg.tracker_jitter) {
      frame.leader.position += Vec2{jitter(w.jitter_rng), jitter(w.jitter_rng)};
      frame.follower.position += Vec2{jitter(w.jitter_rng), jitter(w.jitter_rng)};
    }
    w.tracker_history.push_back(frame);
    if (w.tracker_history.size() > kTrackerHistoryLength) {
      w.tracker_history.erase(w.tracker_history.begin());
    }
  }

  // 3. Observation from tracked data only.
  const TrackedFrame latest = w.tracker_history.back();
  const bool moving = leader_moving(w.tracker_history, cfg.tracker_hz);
  const Observation obs = compute_observation(latest.leader, latest.follower, moving);

  // 4-5. Behavior, then the stop gate.
  const ControlParams params{cfg.dt, cfg.geometry};
  auto step = behavior_step(w.behavior_state, {obs, latest.leader, latest.follower, t_start},
                            params);
  const WheelCommand applied = clamp_command(apply_leader_stop_gate(step.command, obs));

  // 6. Follower.
  w.follower = clamp_to_arena(step_pose(w.follower, applied, cfg.dt, cfg.geometry), cfg);
  w.behavior_state = std::move(step.state);
  w.last_observation = obs;

  // 7. Lap progress from ground truth.
  const bool lap_done = update_lap_progress(w.lap, cfg.path, w.leader.position, t_end);

  // 8. Record.
  ++w.ticks;
  TickRecord rec{t_end,
                 w.leader,
                 w.follower,
                 applied,
                 state_name(w.behavior_state),
                 obs.d_norm,
                 obs.theta_deg,
                 obs.leader_moving,
                 w.lap.visited_count()};
  return {std::move(w), std::move(rec), step.command, lap_done};
}

TrialLog run_trial(const TrialConfig& cfg, const KeySource& keys, double max_t,
                   LogWriter* sink, const std::string& created_tag) {
  TrialLog log;
  log.header = {cfg, created_tag};
  World w = make_world(cfg);
  const auto max_ticks =
      static_cast<std::int64_t>(std::ceil(std::max(0.0, max_t) / cfg.dt - 1e-9));

  std::optional<double> lap_time;
  while (w.ticks < max_ticks) {
    const KeySet k = keys(w.sim_time());
    auto out = tick(std::move(w), k);
    w = std::move(out.world);
    TickRecord rec = quantized(std::move(out.record));
    if (sink) sink->append(rec);
    log.records.push_back(std::move(rec));
    if (out.lap_completed) {
      lap_time = quantize4(w.sim_time());
      break;
    }
  }
  log.footer = lap_time ? LogFooter{true, *lap_time} : LogFooter{false, 0.0};
  if (sink) sink->finish(*log.footer);
  return log;
}

TrialLog run_trial(const TrialConfig& cfg, const LeaderScript& script, double max_t,
                   LogWriter* sink, const std::string& created_tag) {
  return run_trial(cfg, [&script](double t) { return scripted_step(script, t); }, max_t, sink,
                   created_tag);
}

}  // namespace emotive
