#include "emotive/trial_config.hpp"

#include <cmath>
#include <stdexcept>

namespace emotive {

int TrialConfig::physics_hz() const { return static_cast<int>(std::lround(1.0 / dt)); }

void validate(const TrialConfig& cfg) {
  if (!(cfg.dt > 0.0) || !std::isfinite(cfg.dt)) {
    throw std::invalid_argument("dt must be positive");
  }
  const int hz = cfg.physics_hz();
  if (hz <= 0 || std::abs(hz * cfg.dt - 1.0) > 1e-9) {
    throw std::invalid_argument("dt must be 1/N seconds for an integer N");
  }
  // Sampling rates need not divide the physics rate: samples land on the
  // first tick of each sampling period (see tick()).
  if (cfg.tracker_hz <= 0 || cfg.tracker_hz > hz) {
    throw std::invalid_argument("tracker_hz must be in (0, physics rate]");
  }
  if (cfg.frame_hz <= 0 || cfg.frame_hz > hz) {
    throw std::invalid_argument("frame_hz must be in (0, physics rate]");
  }
  if (cfg.path.checkpoints.size() < 2) {
    throw std::invalid_argument("path needs at least 2 checkpoints");
  }
  if (!(cfg.geometry.track_width_m > 0.0)) {
    throw std::invalid_argument("track width must be positive");
  }
  if (!(cfg.arena_width > 0.0) || !(cfg.arena_height > 0.0)) {
    throw std::invalid_argument("arena must have positive size");
  }
  const auto& s = cfg.leader_speeds;
  for (double v : {s.forward, s.rotate, s.inner}) {
    if (!std::isfinite(v) || v < 0.0 || v > kMaxWheelSpeed) {
      throw std::invalid_argument("leader speeds must be within [0, 0.2] m/s");
    }
  }
}

nlohmann::ordered_json config_to_json(const TrialConfig& cfg) {
  nlohmann::ordered_json j;
  j["behavior"] = std::string(to_string(cfg.behavior));
  j["seed"] = cfg.seed;
  j["dt"] = cfg.dt;
  j["tracker_hz"] = cfg.tracker_hz;
  j["frame_hz"] = cfg.frame_hz;
  if (cfg.path_id == "default") {
    j["path"] = "default";
  } else {
    nlohmann::ordered_json pts = nlohmann::ordered_json::array();
    for (const auto& p : cfg.path.checkpoints) pts.push_back({p.x, p.y});
    j["path"] = {{"checkpoints", pts}};
  }
  j["leader_speeds"] = {{"forward", cfg.leader_speeds.forward},
                        {"rotate", cfg.leader_speeds.rotate},
                        {"inner", cfg.leader_speeds.inner}};
  j["track_width"] = cfg.geometry.track_width_m;
  j["arena"] = {cfg.arena_width, cfg.arena_height};
  j["tracker_jitter"] = cfg.tracker_jitter;
  return j;
}

TrialConfig config_from_json(const nlohmann::json& j) {
  TrialConfig cfg;
  try {
    const auto kind = parse_behavior_kind(j.at("behavior").get<std::string>());
    if (!kind) throw std::invalid_argument("unknown behavior");
    cfg.behavior = *kind;
    cfg.seed = j.at("seed").get<std::uint64_t>();
    cfg.dt = j.at("dt").get<double>();
    cfg.tracker_hz = j.at("tracker_hz").get<int>();
    cfg.frame_hz = j.at("frame_hz").get<int>();
    const auto& path = j.at("path");
    if (path.is_string()) {
      if (path.get<std::string>() != "default") throw std::invalid_argument("unknown path id");
      cfg.path_id = "default";
      cfg.path = default_path();
    } else {
      cfg.path_id = "custom";
      cfg.path = parse_path_json(path.dump());
    }
    const auto& speeds = j.at("leader_speeds");
    cfg.leader_speeds = {speeds.at("forward").get<double>(), speeds.at("rotate").get<double>(),
                         speeds.at("inner").get<double>()};
    cfg.geometry.track_width_m = j.at("track_width").get<double>();
    cfg.arena_width = j.at("arena").at(0).get<double>();
    cfg.arena_height = j.at("arena").at(1).get<double>();
    cfg.tracker_jitter = j.at("tracker_jitter").get<bool>();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("config: ") + e.what());
  }
  validate(cfg);
  return cfg;
}

}  // namespace emotive
