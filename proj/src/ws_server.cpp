#include "emotive/ws_server.hpp"

#include <boost/asio/steady_timer.hpp>
#include <boost/asio/strand.hpp>
#include <boost/beast/core.hpp>
#include <boost/beast/http.hpp>
#include <boost/beast/websocket.hpp>
#include <chrono>
#include <deque>
#include <iostream>

namespace emotive {

namespace net = boost::asio;
namespace beast = boost::beast;
namespace http = beast::http;
namespace websocket = beast::websocket;
using tcp = net::ip::tcp;

namespace {

// Outbound backlog above which state frames are dropped for a slow client.
constexpr std::size_t kMaxQueuedFrames = 256;
// Ticks run back-to-back at most this many times to catch up after a stall.
constexpr int kMaxCatchUpTicks = 10;

class Connection : public std::enable_shared_from_this<Connection> {
 public:
  Connection(tcp::socket socket, const SessionOptions& options)
      : stream_(std::move(socket)), timer_(stream_.get_executor()), session_(options) {}

  void run() { read_request(); }

 private:
  void read_request() {
    stream_.expires_after(std::chrono::seconds(30));
    http::async_read(stream_, buffer_, request_,
                     [self = shared_from_this()](beast::error_code ec, std::size_t) {
                       if (!ec) self->on_request();
                     });
  }

  void on_request() {
    stream_.expires_never();
    if (request_.target() != "/ws" || !websocket::is_upgrade(request_)) {
      auto res = std::make_shared<http::response<http::string_body>>(http::status::not_found,
                                                                      request_.version());
      res->set(http::field::content_type, "text/plain");
      res->body() = "not found\n";
      res->prepare_payload();
      res->keep_alive(false);
      http::async_write(stream_, *res,
                        [self = shared_from_this(), res](beast::error_code, std::size_t) {
                          beast::error_code ignored;
                          self->stream_.socket().shutdown(tcp::socket::shutdown_send, ignored);
                        });
      return;
    }
    ws_.emplace(stream_.release_socket());
    ws_->set_option(websocket::stream_base::timeout::suggested(beast::role_type::server));
    ws_->text(true);
    ws_->async_accept(request_, [self = shared_from_this()](beast::error_code ec) {
      if (ec) return;
      self->next_tick_ = std::chrono::steady_clock::now() + self->tick_period();
      self->read_message();
      self->schedule_tick();
    });
  }

  void read_message() {
    ws_->async_read(in_buffer_, [self = shared_from_this()](beast::error_code ec, std::size_t) {
      if (ec) {
        self->closed_ = true;
        self->timer_.cancel();
        return;
      }
      const std::string text = beast::buffers_to_string(self->in_buffer_.data());
      self->in_buffer_.consume(self->in_buffer_.size());
      self->send(self->session_.on_message(text));
      self->read_message();
    });
  }

  std::chrono::steady_clock::duration tick_period() const {
    return std::chrono::duration_cast<std::chrono::steady_clock::duration>(
        std::chrono::duration<double>(session_.dt()));
  }

  void schedule_tick() {
    timer_.expires_at(next_tick_);
    timer_.async_wait([self = shared_from_this()](beast::error_code ec) {
      if (ec || self->closed_) return;
      self->run_due_ticks();
      self->schedule_tick();
    });
  }

  // Runs every tick whose deadline has passed, bounded; a longer stall drops
  // the backlog instead of fast-forwarding the simulation.
  void run_due_ticks() {
    const auto now = std::chrono::steady_clock::now();
    const auto period = tick_period();
    for (int ran = 0; next_tick_ <= now && ran < kMaxCatchUpTicks; ++ran) {
      send(session_.on_tick());
      next_tick_ += period;
    }
    if (next_tick_ <= now) next_tick_ = now + period;
  }

  void send(std::vector<std::string> messages) {
    for (auto& m : messages) {
      const bool is_state = m.starts_with("{\"type\":\"state\"");
      if (is_state && outbox_.size() >= kMaxQueuedFrames) continue;
      outbox_.push_back(std::move(m));
    }
    if (!writing_) write_next();
  }

  void write_next() {
    if (outbox_.empty() || closed_) {
      writing_ = false;
      return;
    }
    writing_ = true;
    ws_->async_write(net::buffer(outbox_.front()),
                     [self = shared_from_this()](beast::error_code ec, std::size_t) {
                       if (ec) {
                         self->closed_ = true;
                         self->timer_.cancel();
                         return;
                       }
                       self->outbox_.pop_front();
                       self->write_next();
                     });
  }

  beast::tcp_stream stream_;
  std::optional<websocket::stream<beast::tcp_stream>> ws_;
  beast::flat_buffer buffer_;
  beast::flat_buffer in_buffer_;
  http::request<http::string_body> request_;
  net::steady_timer timer_;
  std::chrono::steady_clock::time_point next_tick_;
  LiveSession session_;
  std::deque<std::string> outbox_;
  bool writing_{false};
  bool closed_{false};
};

}  // namespace

struct WsServer::Impl : std::enable_shared_from_this<WsServer::Impl> {
  Impl(net::io_context& io, const tcp::endpoint& endpoint, SessionOptions opts)
      : acceptor(io, endpoint), options(std::move(opts)) {}

  void accept() {
    acceptor.async_accept(net::make_strand(acceptor.get_executor()),
                          [self = shared_from_this()](beast::error_code ec, tcp::socket socket) {
                            if (ec) {
                              if (ec != net::error::operation_aborted) {
                                std::cerr << "accept: " << ec.message() << '\n';
                              }
                              return;
                            }
                            SessionOptions opts = self->options;
                            opts.session_tag = "s" + std::to_string(++self->connections);
                            std::make_shared<Connection>(std::move(socket), opts)->run();
                            self->accept();
                          });
  }

  tcp::acceptor acceptor;
  SessionOptions options;
  std::uint64_t connections{0};
};

WsServer::WsServer(net::io_context& io, const tcp::endpoint& endpoint, SessionOptions options)
    : impl_(std::make_shared<Impl>(io, endpoint, std::move(options))) {}

WsServer::~WsServer() = default;

unsigned short WsServer::port() const { return impl_->acceptor.local_endpoint().port(); }

void WsServer::start() { impl_->accept(); }

void WsServer::stop() {
  beast::error_code ignored;
  impl_->acceptor.close(ignored);
}

}  // namespace emotive
