// Headless trial runner: drives the leader from a key script, writes the
// trial log and prints summary metrics as JSON.
//
// Exit codes: 0 lap completed, 2 timeout, 1 usage or I/O error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "emotive/leader_control.hpp"
#include "emotive/path.hpp"
#include "emotive/sim_engine.hpp"
#include "emotive/telemetry.hpp"

namespace {

std::string read_file(const std::string& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + file);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Run one leader-follower trial headless"};
  std::string behavior = "neutral";
  std::uint64_t seed = 0;
  std::string script_file;
  std::string path_arg = "default";
  double max_t = 300.0;
  std::string out_file;
  bool jitter = false;

  app.add_option("--behavior", behavior, "neutral | happy | angry | sad")
      ->check(CLI::IsMember({"neutral", "happy", "angry", "sad"}));
  app.add_option("--seed", seed, "RNG seed");
  app.add_option("--script", script_file, "leader key script (default: built-in reference lap)");
  app.add_option("--path", path_arg, "'default' or a path JSON file");
  app.add_option("--max-t", max_t, "time limit in seconds")->check(CLI::PositiveNumber);
  app.add_option("--out", out_file, "trial log output file");
  app.add_flag("--tracker-jitter", jitter, "add +-1 px seeded jitter to tracked positions");
  CLI11_PARSE(app, argc, argv);

  try {
    emotive::TrialConfig cfg;
    cfg.behavior = *emotive::parse_behavior_kind(behavior);
    cfg.seed = seed;
    cfg.tracker_jitter = jitter;
    if (path_arg != "default") {
      cfg.path = emotive::parse_path_json(read_file(path_arg));
      cfg.path_id = "custom";
    }
    emotive::validate(cfg);

    const auto script = emotive::parse_leader_script(
        script_file.empty() ? std::string(emotive::reference_lap_script_text())
                            : read_file(script_file));

    emotive::TrialLog log;
    if (!out_file.empty()) {
      std::ofstream out(out_file, std::ios::binary);
      if (!out) throw std::runtime_error("cannot open " + out_file + " for writing");
      emotive::LogWriter writer(out, {cfg, "headless"});
      log = emotive::run_trial(cfg, script, max_t, &writer);
    } else {
      log = emotive::run_trial(cfg, script, max_t);
    }

    std::cout << emotive::metrics_to_json(emotive::summarize(log)) << '\n';
    return log.footer && log.footer->lap_completed ? 0 : 2;
  } catch (const emotive::ScriptParseError& e) {
    std::cerr << "script: " << e.what() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return 1;
}
