#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "emotive/geometry.hpp"

namespace emotive {

inline constexpr double kArenaWidthPx = 1280.0;
inline constexpr double kArenaHeightPx = 720.0;
inline constexpr double kCheckpointCapturePx = 60.0;

/// Closed course as an ordered checkpoint loop. Checkpoint 0 is the start.
struct CoursePath {
  std::vector<Vec2> checkpoints;

  /// Direction the leader faces at the start: toward checkpoint 1.
  double start_heading() const;
  bool operator==(const CoursePath&) const = default;
};

/// Rounded rectangle centered in the arena: straights 800 x 300 px, corner
/// radius 100 px, sampled every ~100 px. Starts at the left end of the top
/// straight and runs clockwise on screen.
CoursePath default_path();

/// Parses `{"checkpoints":[[x,y],...]}`. Needs at least 2 points.
CoursePath parse_path_json(std::string_view text);
std::string path_to_json(const CoursePath& path);

struct LapProgress {
  std::vector<bool> visited;
  int laps_done{0};
  std::vector<double> lap_times;

  int visited_count() const;
  bool operator==(const LapProgress&) const = default;
};

LapProgress start_lap_progress(const CoursePath& path, Vec2 leader_position);

/// Marks checkpoints within kCheckpointCapturePx of the leader. A lap
/// completes when every checkpoint is visited and the leader is back at the
/// start checkpoint; visited flags then reset. Returns true on completion.
bool update_lap_progress(LapProgress& lap, const CoursePath& path, Vec2 leader_position,
                         double t);

}  // namespace emotive
