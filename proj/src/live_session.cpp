#include "emotive/live_session.hpp"

#include <algorithm>

#include "emotive/json_number.hpp"

namespace emotive {

namespace {

bool is_plain_name(std::string_view name) {
  if (name.empty() || name.size() > 128 || name.front() == '.') return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
           c == '-' || c == '_' || c == '.';
  });
}

}  // namespace

std::filesystem::path resolve_replay_path(const std::filesystem::path& log_dir,
                                          std::string_view name) {
  if (log_dir.empty()) throw ProtocolError("replay is disabled (no log directory)");
  if (!is_plain_name(name)) throw ProtocolError("replay: invalid log name");
  const std::filesystem::path direct = log_dir / std::string(name);
  if (std::filesystem::is_regular_file(direct)) return direct;
  const std::filesystem::path with_ext = log_dir / (std::string(name) + ".log");
  if (std::filesystem::is_regular_file(with_ext)) return with_ext;
  throw ProtocolError("replay: no such log '" + std::string(name) + "'");
}

LiveSession::LiveSession(SessionOptions opts) : opts_(std::move(opts)) {
  config_.path = opts_.path;
  config_.path_id = opts_.path_id;
}

LiveSession::~LiveSession() {
  if (log_writer_ && !log_writer_->finished()) {
    try {
      close_log({false, 0.0});
    } catch (const LogError&) {
      // Nothing useful to do while tearing down.
    }
  }
}

std::vector<std::string> LiveSession::on_message(std::string_view text) {
  ClientMessage msg;
  try {
    msg = parse_client_message(text);
  } catch (const ProtocolError& e) {
    return {encode_error(e.what())};
  }

  if (const auto* start_cmd = std::get_if<StartCommand>(&msg)) return start(*start_cmd);
  if (const auto* keys_cmd = std::get_if<KeysCommand>(&msg)) {
    keys_ = keys_cmd->keys.normalized();
    return {};
  }
  if (std::holds_alternative<StopCommand>(msg)) {
    if (mode_ == Mode::kLive) close_log({false, 0.0});
    mode_ = Mode::kIdle;
    world_.reset();
    replay_log_.reset();
    keys_ = {};
    return {};
  }
  return replay(std::get<ReplayCommand>(msg));
}

std::vector<std::string> LiveSession::start(const StartCommand& cmd) {
  TrialConfig cfg = config_;
  cfg.behavior = cmd.behavior;
  cfg.seed = cmd.seed;

  std::ofstream stream;
  std::string id;
  if (!opts_.log_dir.empty()) {
    id = (opts_.session_tag.empty() ? "" : opts_.session_tag + "-") + "trial-" +
         std::to_string(trial_counter_ + 1) + "-" +
         std::string(to_string(cmd.behavior)) + "-" + std::to_string(cmd.seed);
    stream.open(opts_.log_dir / (id + ".log"), std::ios::binary | std::ios::trunc);
    if (!stream) return {encode_error("cannot create trial log " + id)};
  }

  if (mode_ == Mode::kLive) close_log({false, 0.0});
  log_writer_.reset();
  log_stream_ = std::move(stream);
  if (log_stream_.is_open()) {
    log_writer_ = std::make_unique<LogWriter>(log_stream_, LogHeader{cfg, "live"});
    last_log_id_ = id;
  }
  ++trial_counter_;
  config_ = cfg;
  world_ = make_world(cfg);
  replay_log_.reset();
  keys_ = {};
  mode_ = Mode::kLive;
  return {encode_state_frame(*world_)};
}

std::vector<std::string> LiveSession::replay(const ReplayCommand& cmd) {
  TrialLog log;
  try {
    log = load_log(resolve_replay_path(opts_.log_dir, cmd.log));
  } catch (const ProtocolError& e) {
    return {encode_error(e.what())};
  } catch (const LogError& e) {
    return {encode_error(std::string("replay: ") + e.what())};
  }
  if (mode_ == Mode::kLive) close_log({false, 0.0});
  world_.reset();
  replay_log_ = std::move(log);
  replay_cursor_ = 0;
  mode_ = Mode::kReplay;
  return {};
}

std::vector<std::string> LiveSession::on_tick() {
  std::vector<std::string> out;
  if (mode_ == Mode::kLive) {
    const auto index = world_->ticks;
    auto result = tick(std::move(*world_), keys_);
    world_ = std::move(result.world);
    const TrialConfig& cfg = *world_->config;
    if (log_writer_) {
      try {
        log_writer_->append(quantized(result.record));
      } catch (const LogError& e) {
        log_writer_.reset();
        log_stream_.close();
        mode_ = Mode::kIdle;
        return {encode_error(std::string("trial aborted: ") + e.what())};
      }
    }

    if (is_sample_tick(index, cfg.frame_hz, cfg.physics_hz()) || result.lap_completed) {
      out.push_back(encode_state_frame(*world_));
    }
    if (result.lap_completed) {
      const double lap_time = world_->sim_time();
      close_log({true, quantize4(lap_time)});
      out.push_back(encode_trial_end(lap_time));
      mode_ = Mode::kIdle;
    } else if (world_->sim_time() >= opts_.max_t) {
      close_log({false, 0.0});
      out.push_back(encode_error("trial timed out"));
      mode_ = Mode::kIdle;
    }
  } else if (mode_ == Mode::kReplay) {
    const auto& log = *replay_log_;
    const TrialConfig& cfg = log.header.config;
    const std::size_t i = replay_cursor_++;
    const bool last = replay_cursor_ >= log.records.size();
    const bool lap = log.footer && log.footer->lap_completed;
    if (i < log.records.size() &&
        (is_sample_tick(static_cast<std::int64_t>(i), cfg.frame_hz, cfg.physics_hz()) || last)) {
      out.push_back(
          encode_state_frame(state_frame_from(log.records[i], cfg, last && lap ? 1 : 0)));
    }
    if (last) {
      if (lap) out.push_back(encode_trial_end(log.footer->lap_time));
      replay_log_.reset();
      mode_ = Mode::kIdle;
    }
  }
  return out;
}

void LiveSession::close_log(const LogFooter& footer) {
  if (!log_writer_) return;
  if (!log_writer_->finished()) log_writer_->finish(footer);
  log_writer_.reset();
  log_stream_.close();
}

}  // namespace emotive
