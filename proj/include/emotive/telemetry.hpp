#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "emotive/geometry.hpp"
#include "emotive/kinematics.hpp"
#include "emotive/trial_config.hpp"

namespace emotive {

inline constexpr std::string_view kLogFormat = "emotive-follow-log/1";

/// Full state of one physics tick, as logged. Poses and the observation are
/// taken after the tick; `cmd` is the follower command applied during it.
struct TickRecord {
  double t{0.0};
  Pose leader;
  Pose follower;
  WheelCommand cmd;
  std::string state;
  double d_norm{0.0};
  double theta{0.0};
  bool leader_moving{true};
  int lap_visited{0};

  bool operator==(const TickRecord&) const = default;
};

/// Rounds every real field to the 4 decimals the log stores.
TickRecord quantized(TickRecord r);

struct LogHeader {
  TrialConfig config;
  std::string created{"headless"};  // caller-chosen tag; never a wall-clock time
  bool operator==(const LogHeader&) const = default;
};

struct LogFooter {
  bool lap_completed{false};
  double lap_time{0.0};  // meaningful only when lap_completed
  bool operator==(const LogFooter&) const = default;
};

struct TrialLog {
  LogHeader header;
  std::vector<TickRecord> records;
  std::optional<LogFooter> footer;
  bool operator==(const TrialLog&) const = default;
};

std::string encode_header(const LogHeader& h);
std::string encode_record(const TickRecord& r);
std::string encode_footer(const LogFooter& f);

class LogError : public std::runtime_error {
 public:
  explicit LogError(const std::string& what, std::optional<double> last_valid_t = std::nullopt)
      : std::runtime_error(what), last_valid_t_(last_valid_t) {}
  /// For truncated logs, t of the last record that parsed.
  std::optional<double> last_valid_t() const { return last_valid_t_; }

 private:
  std::optional<double> last_valid_t_;
};

/// Line-oriented log sink. The header goes out on construction; the footer
/// closes the log and flushes. Throws LogError on stream failure or misuse.
class LogWriter {
 public:
  LogWriter(std::ostream& out, const LogHeader& header);

  void append(const TickRecord& r);
  void finish(const LogFooter& footer);
  bool finished() const { return finished_; }

 private:
  void write_line(const std::string& line);

  std::ostream* out_;
  bool finished_{false};
};

std::string serialize_log(const TrialLog& log);
void save_log(const std::filesystem::path& file, const TrialLog& log);

/// Validates format version, strictly increasing t and footer presence.
TrialLog load_log(std::istream& in);
TrialLog load_log(const std::filesystem::path& file);

struct Metrics {
  std::size_t samples{0};  // records with the leader moving
  double mean_d{0.0};
  double p95_d{0.0};
  double min_d{0.0};
  double stop_fraction{0.0};
  int spin_count{0};
  int pattern_switch_count{0};
  std::optional<double> lap_time_s;

  bool operator==(const Metrics&) const = default;
};

/// Distance statistics cover only ticks where the leader is moving. p95 is
/// nearest-rank.
Metrics summarize(const TrialLog& log);

std::string metrics_to_json(const Metrics& m);

}  // namespace emotive
