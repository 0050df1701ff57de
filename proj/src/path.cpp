#include "emotive/path.hpp"

#include <algorithm>
#include <cmath>
#include <nlohmann/json.hpp>
#include <numbers>
#include <stdexcept>

namespace emotive {

double CoursePath::start_heading() const {
  if (checkpoints.size() < 2) return 0.0;
  const Vec2 d = checkpoints[1] - checkpoints[0];
  return std::atan2(d.y, d.x);
}

namespace {

// Point at arc length s along the rounded rectangle, clockwise on screen
// (y down) from the left end of the top straight.
Vec2 rounded_rect_point(double s) {
  constexpr double kCx = kArenaWidthPx / 2.0;
  constexpr double kCy = kArenaHeightPx / 2.0;
  constexpr double kLong = 800.0;
  constexpr double kShort = 300.0;
  constexpr double kRadius = 100.0;
  constexpr double kArc = std::numbers::pi * kRadius / 2.0;
  constexpr double kLeft = kCx - kLong / 2.0;   // straight x extent
  constexpr double kRight = kCx + kLong / 2.0;
  constexpr double kTop = kCy - kShort / 2.0;   // straight y extent
  constexpr double kBottom = kCy + kShort / 2.0;

  auto arc = [](Vec2 center, double start_angle, double len) {
    const double a = start_angle + len / kRadius;
    return Vec2{center.x + kRadius * std::cos(a), center.y + kRadius * std::sin(a)};
  };
  const double half_pi = std::numbers::pi / 2.0;

  if (s < kLong) return {kLeft + s, kTop - kRadius};
  s -= kLong;
  if (s < kArc) return arc({kRight, kTop}, -half_pi, s);
  s -= kArc;
  if (s < kShort) return {kRight + kRadius, kTop + s};
  s -= kShort;
  if (s < kArc) return arc({kRight, kBottom}, 0.0, s);
  s -= kArc;
  if (s < kLong) return {kRight - s, kBottom + kRadius};
  s -= kLong;
  if (s < kArc) return arc({kLeft, kBottom}, half_pi, s);
  s -= kArc;
  if (s < kShort) return {kLeft - kRadius, kBottom - s};
  s -= kShort;
  return arc({kLeft, kTop}, std::numbers::pi, s);
}

}  // namespace

CoursePath default_path() {
  const double perimeter = 2.0 * (800.0 + 300.0) + 2.0 * std::numbers::pi * 100.0;
  const int count = static_cast<int>(std::lround(perimeter / 100.0));
  const double spacing = perimeter / count;
  CoursePath path;
  path.checkpoints.reserve(count);
  for (int i = 0; i < count; ++i) path.checkpoints.push_back(rounded_rect_point(i * spacing));
  return path;
}

CoursePath parse_path_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("path file: ") + e.what());
  }
  if (!j.is_object() || !j.contains("checkpoints") || !j["checkpoints"].is_array()) {
    throw std::invalid_argument("path file: missing \"checkpoints\" array");
  }
  CoursePath path;
  for (const auto& p : j["checkpoints"]) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number()) {
      throw std::invalid_argument("path file: checkpoint must be [x, y]");
    }
    path.checkpoints.push_back({p[0].get<double>(), p[1].get<double>()});
  }
  if (path.checkpoints.size() < 2) {
    throw std::invalid_argument("path file: need at least 2 checkpoints");
  }
  return path;
}

std::string path_to_json(const CoursePath& path) {
  nlohmann::json pts = nlohmann::json::array();
  for (const auto& p : path.checkpoints) pts.push_back({p.x, p.y});
  return nlohmann::json{{"checkpoints", pts}}.dump();
}

int LapProgress::visited_count() const {
  return static_cast<int>(std::count(visited.begin(), visited.end(), true));
}

LapProgress start_lap_progress(const CoursePath& path, Vec2 leader_position) {
  LapProgress lap;
  lap.visited.assign(path.checkpoints.size(), false);
  for (std::size_t i = 0; i < path.checkpoints.size(); ++i) {
    lap.visited[i] = distance(leader_position, path.checkpoints[i]) <= kCheckpointCapturePx;
  }
  return lap;
}

bool update_lap_progress(LapProgress& lap, const CoursePath& path, Vec2 leader_position,
                         double t) {
  for (std::size_t i = 0; i < path.checkpoints.size(); ++i) {
    if (distance(leader_position, path.checkpoints[i]) <= kCheckpointCapturePx) {
      lap.visited[i] = true;
    }
  }
  const bool all = std::all_of(lap.visited.begin(), lap.visited.end(), [](bool v) { return v; });
  const bool at_start = distance(leader_position, path.checkpoints.front()) <= kCheckpointCapturePx;
  if (!(all && at_start)) return false;

  ++lap.laps_done;
  double lap_start = 0.0;
  for (double lt : lap.lap_times) lap_start += lt;
  lap.lap_times.push_back(t - lap_start);
  std::fill(lap.visited.begin(), lap.visited.end(), false);
  lap.visited[0] = true;
  return true;
}

}  // namespace emotive
