#pragma once

#include <cstdint>
#include <nlohmann/json.hpp>
#include <string>

#include "emotive/behaviors.hpp"
#include "emotive/kinematics.hpp"
#include "emotive/leader_control.hpp"
#include "emotive/path.hpp"

namespace emotive {

/// One trial: a follower behavior, a seed, rates and the course.
struct TrialConfig {
  BehaviorKind behavior{BehaviorKind::kNeutral};
  std::uint64_t seed{0};
  double dt{0.01};
  int tracker_hz{30};
  int frame_hz{30};
  std::string path_id{"default"};  // "default" or "custom"
  CoursePath path{default_path()};
  LeaderSpeedTable leader_speeds;
  RobotGeometry geometry;
  double arena_width{kArenaWidthPx};
  double arena_height{kArenaHeightPx};
  bool tracker_jitter{false};  // uniform +-1 px on tracked positions

  int physics_hz() const;
  bool operator==(const TrialConfig&) const = default;
};

/// Throws std::invalid_argument describing the first problem found.
void validate(const TrialConfig& cfg);

nlohmann::ordered_json config_to_json(const TrialConfig& cfg);
TrialConfig config_from_json(const nlohmann::json& j);

}  // namespace emotive
