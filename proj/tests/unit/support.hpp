#pragma once

#include <filesystem>
#include <random>
#include <string>

#include "emotive/geometry.hpp"
#include "emotive/kinematics.hpp"

namespace emotive::testing {

inline Observation obs(double d_norm, double theta_deg, bool moving = true) {
  return {{d_norm, 0.0}, d_norm, theta_deg, moving};
}

inline bool near_cmd(WheelCommand a, WheelCommand b, double tol = 1e-12) {
  return std::abs(a.v_left - b.v_left) <= tol && std::abs(a.v_right - b.v_right) <= tol;
}

// Scratch directory removed on scope exit.
class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() /
            ("emotive-" + tag + "-" + std::to_string(rd()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

}  // namespace emotive::testing
