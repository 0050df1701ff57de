#include "emotive/leader_control.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

namespace emotive {

WheelCommand keys_to_command(KeySet keys, const LeaderSpeedTable& table) {
  const KeySet k = keys.normalized();
  const double f = table.forward;
  const double r = table.rotate;
  const double i = table.inner;
  WheelCommand c = kStop;
  if (k.up) {
    c = k.left ? WheelCommand{i, f} : k.right ? WheelCommand{f, i} : WheelCommand{f, f};
  } else if (k.down) {
    c = k.left ? WheelCommand{-i, -f} : k.right ? WheelCommand{-f, -i} : WheelCommand{-f, -f};
  } else if (k.left) {
    c = {-r, r};
  } else if (k.right) {
    c = {r, -r};
  }
  return clamp_command(c);
}

double LeaderScript::total_duration() const {
  double total = 0.0;
  for (const auto& s : segments) total += s.duration_s;
  return total;
}

LeaderScript parse_leader_script(std::string_view text) {
  LeaderScript script;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream words(line);
    std::string word;
    if (!(words >> word) || word.front() == '#') continue;

    double duration = 0.0;
    const auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), duration);
    if (ec != std::errc() || ptr != word.data() + word.size()) {
      throw ScriptParseError(line_no, "bad duration '" + word + "'");
    }
    if (!std::isfinite(duration) || duration <= 0.0) {
      throw ScriptParseError(line_no, "duration must be positive");
    }

    KeySet keys;
    int key_count = 0;
    while (words >> word) {
      if (word.front() == '#') break;
      ++key_count;
      if (word == "up") {
        keys.up = true;
      } else if (word == "down") {
        keys.down = true;
      } else if (word == "left") {
        keys.left = true;
      } else if (word == "right") {
        keys.right = true;
      } else if (word != "none") {
        throw ScriptParseError(line_no, "unknown key '" + word + "'");
      }
    }
    if (key_count == 0) throw ScriptParseError(line_no, "missing key list");
    script.segments.push_back({duration, keys.normalized()});
  }
  return script;
}

KeySet scripted_step(const LeaderScript& script, double t) {
  double start = 0.0;
  for (const auto& seg : script.segments) {
    const double end = start + seg.duration_s;
    if (t < end) return t >= start ? seg.keys : KeySet{};
    start = end;
  }
  return {};
}

std::string_view reference_lap_script_text() {
  // Default path: 1000x500 px rounded rectangle (corner radius 100) centered
  // at (640, 360), start (240, 110) heading east. The up+right arc has a
  // 36.2 px radius, so each straight runs until 36.2 px before the far edge.
  // Straights at 28 px/s, 90 deg arcs take 2.95 s.
  return R"(# Reference lap, clockwise on screen.
# top straight, with a pause halfway
15.0 up
10.0 none
15.85 up
2.95 up right
# right side
7.6 up
10.0 none
7.67 up
2.95 up right
# bottom straight
16.5 up
10.0 none
16.63 up
2.95 up right
# left side
7.6 up
10.0 none
7.67 up
2.95 up right
# back to the start
4.0 up
)";
}

}  // namespace emotive
