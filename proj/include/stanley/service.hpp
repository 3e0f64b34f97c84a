#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "stanley/counting.hpp"

namespace httplib {
class Server;
}

namespace stanley {

struct ServiceOptions {
  std::string bind = "127.0.0.1";
  int port = 8080;
  /// Directory holding the built UI; served at "/" when set.
  std::optional<std::string> static_dir;
  /// Cap on memo entries shared across requests. Counts stay exact past it.
  std::optional<std::size_t> cache_cap = 2'000'000;
  /// Positions with more candies than this are refused with 400.
  std::uint64_t max_total = 40;
};

struct ApiResponse {
  int status = 200;
  nlohmann::json body;
};

/// Request handlers, independent of the transport. Thread-safe.
class Api {
 public:
  explicit Api(const ServiceOptions& options = {});

  /// {position, total, count, moves: [{index, child, count}]}
  ApiResponse position(std::optional<std::string_view> pos) const;
  /// {value}
  ApiResponse yfm(std::optional<std::string_view> shape) const;
  /// {play: [positions]}; seed defaults to 0.
  ApiResponse sample(std::optional<std::string_view> pos,
                     std::optional<std::string_view> seed) const;

  const PlayCache& cache() const noexcept { return *cache_; }

 private:
  std::uint64_t max_total_;
  std::unique_ptr<PlayCache> cache_;
};

/// HTTP front end: /api/* routes to Api, everything else to the static directory.
class Server {
 public:
  explicit Server(ServiceOptions options);
  ~Server();

  Server(const Server&) = delete;
  Server& operator=(const Server&) = delete;

  /// Blocks until stop(). Returns false if the socket could not be bound.
  bool listen();
  /// Binds an ephemeral port on options.bind and returns it (or -1).
  int bind_to_any_port();
  /// Serves on a socket bound by bind_to_any_port. Blocks until stop().
  bool listen_after_bind();
  void stop();
  void wait_until_ready() const;

 private:
  ServiceOptions options_;
  Api api_;
  std::unique_ptr<httplib::Server> http_;
};

}  // namespace stanley
