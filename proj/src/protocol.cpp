#include "emotive/protocol.hpp"

#include <nlohmann/json.hpp>

#include "emotive/json_number.hpp"

namespace emotive {

namespace {

std::string encode_pose(const Pose& p) {
  return "{\"x\":" + format4(p.position.x) + ",\"y\":" + format4(p.position.y) +
         ",\"phi\":" + format4(p.heading) + "}";
}

bool required_bool(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_boolean()) {
    throw ProtocolError(std::string("keys: '") + key + "' must be a boolean");
  }
  return j[key].get<bool>();
}

}  // namespace

StateFrame state_frame_from(const World& w) {
  StateFrame f;
  f.t = w.sim_time();
  f.leader = w.leader;
  f.follower = w.follower;
  f.behavior = w.behavior();
  f.behavior_state = state_name(w.behavior_state);
  f.d = w.last_observation.d_norm;
  f.theta = w.last_observation.theta_deg;
  f.visited = w.lap.visited_count();
  f.total = static_cast<int>(w.lap.visited.size());
  f.laps = w.lap.laps_done;
  return f;
}

StateFrame state_frame_from(const TickRecord& r, const TrialConfig& cfg, int laps) {
  StateFrame f;
  f.t = r.t;
  f.leader = r.leader;
  f.follower = r.follower;
  f.behavior = cfg.behavior;
  f.behavior_state = r.state;
  f.d = r.d_norm;
  f.theta = r.theta;
  f.visited = r.lap_visited;
  f.total = static_cast<int>(cfg.path.checkpoints.size());
  f.laps = laps;
  return f;
}

std::string encode_state_frame(const StateFrame& f) {
  std::string s = "{\"type\":\"state\",\"t\":" + format4(f.t);
  s += ",\"leader\":" + encode_pose(f.leader);
  s += ",\"follower\":" + encode_pose(f.follower);
  s += ",\"behavior\":\"" + std::string(to_string(f.behavior)) + "\"";
  s += ",\"behavior_state\":" + nlohmann::json(f.behavior_state).dump();
  s += ",\"d\":" + format4(f.d);
  s += ",\"theta\":" + format4(f.theta);
  s += ",\"lap\":{\"visited\":" + std::to_string(f.visited) +
       ",\"total\":" + std::to_string(f.total) + ",\"laps\":" + std::to_string(f.laps) + "}}";
  return s;
}

std::string encode_state_frame(const World& w) { return encode_state_frame(state_frame_from(w)); }

std::string encode_trial_end(double lap_time) {
  return "{\"type\":\"trial_end\",\"lap_time\":" + format4(lap_time) + "}";
}

std::string encode_error(std::string_view msg) {
  return "{\"type\":\"error\",\"msg\":" + nlohmann::json(std::string(msg)).dump() + "}";
}

ClientMessage parse_client_message(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error&) {
    throw ProtocolError("malformed JSON");
  }
  if (!j.is_object() || !j.contains("type") || !j["type"].is_string()) {
    throw ProtocolError("message needs a string 'type'");
  }
  const auto type = j["type"].get<std::string>();

  if (type == "start") {
    if (!j.contains("behavior") || !j["behavior"].is_string()) {
      throw ProtocolError("start: 'behavior' must be a string");
    }
    const auto kind = parse_behavior_kind(j["behavior"].get<std::string>());
    if (!kind) throw ProtocolError("start: unknown behavior '" + j["behavior"].get<std::string>() + "'");
    std::uint64_t seed = 0;
    if (j.contains("seed")) {
      if (!j["seed"].is_number_unsigned()) {
        throw ProtocolError("start: 'seed' must be a non-negative integer");
      }
      seed = j["seed"].get<std::uint64_t>();
    }
    return StartCommand{*kind, seed};
  }
  if (type == "keys") {
    KeySet k;
    k.up = required_bool(j, "up");
    k.down = required_bool(j, "down");
    k.left = required_bool(j, "left");
    k.right = required_bool(j, "right");
    return KeysCommand{k};
  }
  if (type == "stop") return StopCommand{};
  if (type == "replay") {
    if (!j.contains("log") || !j["log"].is_string() || j["log"].get<std::string>().empty()) {
      throw ProtocolError("replay: 'log' must be a non-empty string");
    }
    return ReplayCommand{j["log"].get<std::string>()};
  }
  throw ProtocolError("unknown message type '" + type + "'");
}

}  // namespace emotive
