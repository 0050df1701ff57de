// Live mode: serves the state/command protocol over WebSocket at /ws.

#include <CLI11.hpp>
#include <boost/asio/signal_set.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "emotive/ws_server.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Leader-follower live simulation server"};
  std::string address = "127.0.0.1";
  unsigned short port = 8080;
  std::string log_dir;
  std::string path_file;
  double max_t = 900.0;
  app.add_option("--address", address, "listen address");
  app.add_option("--port", port, "listen port");
  app.add_option("--log-dir", log_dir, "directory for live trial logs and replay sources")
      ->check(CLI::ExistingDirectory);
  app.add_option("--path", path_file, "path JSON file (default course if omitted)")
      ->check(CLI::ExistingFile);
  app.add_option("--max-t", max_t, "per-trial time limit, s")->check(CLI::PositiveNumber);
  CLI11_PARSE(app, argc, argv);

  try {
    emotive::SessionOptions opts;
    opts.log_dir = log_dir;
    opts.max_t = max_t;
    if (!path_file.empty()) {
      std::ifstream in(path_file);
      std::ostringstream ss;
      ss << in.rdbuf();
      opts.path = emotive::parse_path_json(ss.str());
      opts.path_id = "custom";
    }

    boost::asio::io_context io{1};
    emotive::WsServer server(
        io, {boost::asio::ip::make_address(address), port}, std::move(opts));
    server.start();
    std::cout << "listening on ws://" << address << ":" << server.port() << "/ws" << std::endl;

    boost::asio::signal_set signals(io, SIGINT, SIGTERM);
    signals.async_wait([&](const boost::system::error_code&, int) {
      server.stop();
      io.stop();
    });
    io.run();
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
