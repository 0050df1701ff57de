#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "emotive/behaviors.hpp"
#include "emotive/leader_control.hpp"
#include "emotive/sim_engine.hpp"
#include "emotive/telemetry.hpp"

namespace emotive {

/// Payload of a server->client "state" message.
struct StateFrame {
  double t{0.0};
  Pose leader;
  Pose follower;
  BehaviorKind behavior{BehaviorKind::kNeutral};
  std::string behavior_state;
  double d{0.0};
  double theta{0.0};
  int visited{0};
  int total{0};
  int laps{0};
};

StateFrame state_frame_from(const World& w);
StateFrame state_frame_from(const TickRecord& r, const TrialConfig& cfg, int laps = 0);

/// `{"type":"state",...}` with fixed key order and at most 4 decimals.
std::string encode_state_frame(const StateFrame& f);
std::string encode_state_frame(const World& w);

std::string encode_trial_end(double lap_time);
std::string encode_error(std::string_view msg);

struct StartCommand {
  BehaviorKind behavior;
  std::uint64_t seed;
  bool operator==(const StartCommand&) const = default;
};
struct KeysCommand {
  KeySet keys;
  bool operator==(const KeysCommand&) const = default;
};
struct StopCommand {
  bool operator==(const StopCommand&) const = default;
};
struct ReplayCommand {
  std::string log;
  bool operator==(const ReplayCommand&) const = default;
};

using ClientMessage = std::variant<StartCommand, KeysCommand, StopCommand, ReplayCommand>;

class ProtocolError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws ProtocolError for malformed JSON, unknown types or bad payloads.
/// "seed" in a start message is optional and defaults to 0.
ClientMessage parse_client_message(std::string_view text);

}  // namespace emotive
