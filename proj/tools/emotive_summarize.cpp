// Prints summary metrics of a saved trial log.

#include <CLI11.hpp>
#include <iostream>

#include "emotive/telemetry.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Summarize a trial log"};
  std::string log_file;
  app.add_option("log", log_file, "trial log file")->required()->check(CLI::ExistingFile);
  CLI11_PARSE(app, argc, argv);

  try {
    const auto log = emotive::load_log(std::filesystem::path(log_file));
    std::cout << emotive::metrics_to_json(emotive::summarize(log)) << '\n';
    return 0;
  } catch (const emotive::LogError& e) {
    std::cerr << "log error: " << e.what() << '\n';
  }
  return 1;
}
