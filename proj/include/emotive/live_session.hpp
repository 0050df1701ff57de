#pragma once

#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "emotive/leader_control.hpp"
#include "emotive/path.hpp"
#include "emotive/protocol.hpp"
#include "emotive/sim_engine.hpp"
#include "emotive/telemetry.hpp"

namespace emotive {

struct SessionOptions {
  std::filesystem::path log_dir;  // empty: live trials are not logged, replay disabled
  CoursePath path{default_path()};
  std::string path_id{"default"};
  double max_t{900.0};
  std::string session_tag;  // prefixes log ids so concurrent sessions never collide
};

/// One client's trial state, independent of transport. Inbound messages and
/// ticks are fed in by the owner on a single execution context; both return
/// the outbound messages they produce.
class LiveSession {
 public:
  enum class Mode { kIdle, kLive, kReplay };

  explicit LiveSession(SessionOptions opts = {});
  ~LiveSession();
  LiveSession(const LiveSession&) = delete;
  LiveSession& operator=(const LiveSession&) = delete;

  /// Malformed messages produce one error reply and leave the session as it was.
  std::vector<std::string> on_message(std::string_view text);

  /// Advances one physics period. State frames come out at frame_hz.
  std::vector<std::string> on_tick();

  Mode mode() const { return mode_; }
  KeySet keys() const { return keys_; }
  const std::optional<World>& world() const { return world_; }
  double dt() const { return config_.dt; }
  /// Id of the most recently logged live trial, usable in a replay request.
  const std::string& last_log_id() const { return last_log_id_; }

 private:
  std::vector<std::string> start(const StartCommand& cmd);
  std::vector<std::string> replay(const ReplayCommand& cmd);
  void close_log(const LogFooter& footer);

  SessionOptions opts_;
  TrialConfig config_;
  Mode mode_{Mode::kIdle};
  KeySet keys_;
  std::optional<World> world_;
  std::ofstream log_stream_;
  std::unique_ptr<LogWriter> log_writer_;
  std::string last_log_id_;
  int trial_counter_{0};

  std::optional<TrialLog> replay_log_;
  std::size_t replay_cursor_{0};
};

/// Maps a replay request to a file inside `log_dir`. Accepts a trial id or a
/// file name; anything that could escape the directory is rejected.
std::filesystem::path resolve_replay_path(const std::filesystem::path& log_dir,
                                          std::string_view name);

}  // namespace emotive
