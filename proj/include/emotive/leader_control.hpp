#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "emotive/kinematics.hpp"

namespace emotive {

/// Arrow-key snapshot. Use normalized() before mapping to a command.
struct KeySet {
  bool up{false};
  bool down{false};
  bool left{false};
  bool right{false};

  /// Opposing keys cancel: up+down -> neither, left+right -> neither.
  constexpr KeySet normalized() const {
    return {up && !down, down && !up, left && !right, right && !left};
  }
  constexpr bool none() const { return !up && !down && !left && !right; }
  bool operator==(const KeySet&) const = default;
};

/// Leader wheel speeds for the nine key combinations, m/s.
struct LeaderSpeedTable {
  double forward{0.08};
  double rotate{0.05};
  double inner{0.03};  // slower wheel on a forward/backward arc
  bool operator==(const LeaderSpeedTable&) const = default;
};

/// Maps a key set (normalized internally) to a clamped wheel command.
WheelCommand keys_to_command(KeySet keys, const LeaderSpeedTable& table = {});

struct ScriptSegment {
  double duration_s;
  KeySet keys;
  bool operator==(const ScriptSegment&) const = default;
};

struct LeaderScript {
  std::vector<ScriptSegment> segments;

  double total_duration() const;
  bool operator==(const LeaderScript&) const = default;
};

class ScriptParseError : public std::runtime_error {
 public:
  ScriptParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Parses `<duration_seconds> <key>[ <key>...]` lines. Keys are up, down,
/// left, right, none. Blank lines and lines starting with '#' are skipped.
LeaderScript parse_leader_script(std::string_view text);

/// Keys held at time t. Segment i covers [start_i, start_i + duration_i).
/// Past the end of the script nothing is held.
KeySet scripted_step(const LeaderScript& script, double t);

/// Reference lap of the default path, driven clockwise on screen with four
/// pauses, as script text.
std::string_view reference_lap_script_text();

}  // namespace emotive
