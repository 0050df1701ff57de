#pragma once

#include <boost/asio/io_context.hpp>
#include <boost/asio/ip/tcp.hpp>
#include <memory>

#include "emotive/live_session.hpp"

namespace emotive {

/// WebSocket endpoint at `/ws` speaking the live state/command protocol. Each
/// connection owns one LiveSession, ticked by a timer paced to wall-clock.
/// Everything runs on the io_context's thread(s); run it on one thread so a
/// session is never touched concurrently.
class WsServer {
 public:
  WsServer(boost::asio::io_context& io, const boost::asio::ip::tcp::endpoint& endpoint,
           SessionOptions options);
  ~WsServer();

  /// Port actually bound (useful when constructed with port 0).
  unsigned short port() const;

  void start();
  void stop();

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

}  // namespace emotive
