#include "stanley/service.hpp"

#include <charconv>

#include <httplib.h>

#include "stanley/errors.hpp"
#include "stanley/formulas.hpp"
#include "stanley/json_io.hpp"

namespace stanley {

namespace {

constexpr std::uint64_t max_shape_size = 10'000;

ApiResponse error(int status, const std::string& message) {
  return {status, {{"error", message}}};
}

Position parse_bounded(std::string_view text, std::uint64_t max_total) {
  auto p = parse_position(text);
  if (p.total_candies() > max_total) {
    throw precondition_error("position has " + std::to_string(p.total_candies()) +
                             " candies; this server counts at most " +
                             std::to_string(max_total));
  }
  return p;
}

template <class F>
ApiResponse guarded(F&& handler) {
  try {
    return handler();
  } catch (const parse_error& e) {
    return error(400, e.what());
  } catch (const invalid_input& e) {
    return error(400, e.what());
  } catch (const integrality_error& e) {
    return error(500, e.what());
  } catch (const std::exception& e) {
    return error(500, e.what());
  }
}

}  // namespace

Api::Api(const ServiceOptions& options)
    : max_total_(options.max_total), cache_(std::make_unique<PlayCache>(options.cache_cap)) {}

ApiResponse Api::position(std::optional<std::string_view> pos) const {
  if (!pos) return error(400, "missing query parameter 'pos'");
  return guarded([&] {
    const auto p = parse_bounded(*pos, max_total_);
    const PlayCount count = count_plays(p, *cache_);

    PlayCount sum = 0;
    auto moves = nlohmann::json::array();
    for (const auto& [move, child] : legal_moves(p)) {
      const PlayCount child_count = count_plays(child, *cache_);
      sum += child_count;
      moves.push_back({{"index", move.index},
                       {"child", position_json(child)},
                       {"count", count_json(child_count)}});
    }
    if (!p.empty() && sum != count) {
      return error(500, "internal inconsistency: child counts sum to " + sum.str() + ", not " +
                            count.str());
    }
    return ApiResponse{200,
                       {{"position", position_json(p)},
                        {"total", p.total_candies()},
                        {"count", count_json(count)},
                        {"moves", moves}}};
  });
}

ApiResponse Api::yfm(std::optional<std::string_view> shape) const {
  if (!shape) return error(400, "missing query parameter 'shape'");
  return guarded([&] {
    const auto a = parse_partition(*shape);
    if (a.sum() > max_shape_size) throw precondition_error("shape has more than " + std::to_string(max_shape_size) + " cells");
    return ApiResponse{200, {{"value", count_json(stanley::yfm(a))}}};
  });
}

ApiResponse Api::sample(std::optional<std::string_view> pos,
                        std::optional<std::string_view> seed) const {
  if (!pos) return error(400, "missing query parameter 'pos'");
  return guarded([&] {
    const auto p = parse_bounded(*pos, max_total_);
    std::uint64_t seed_value = 0;
    if (seed) {
      auto [ptr, ec] = std::from_chars(seed->data(), seed->data() + seed->size(), seed_value);
      if (ec != std::errc{} || ptr != seed->data() + seed->size()) {
        throw parse_error(static_cast<std::size_t>(ptr - seed->data()),
                          "seed must be a non-negative integer");
      }
    }
    Rng rng(seed_value);
    return ApiResponse{200, {{"play", play_json(sample_play(p, rng, *cache_))}}};
  });
}

namespace {

std::optional<std::string_view> param(const httplib::Request& req, const char* key) {
  auto it = req.params.find(key);
  if (it == req.params.end()) return std::nullopt;
  return std::string_view(it->second);
}

void reply(httplib::Response& res, const ApiResponse& r) {
  res.status = r.status;
  res.set_content(r.body.dump(), "application/json");
}

}  // namespace

Server::Server(ServiceOptions options)
    : options_(std::move(options)), api_(options_), http_(std::make_unique<httplib::Server>()) {
  http_->Get("/api/position", [this](const httplib::Request& req, httplib::Response& res) {
    reply(res, api_.position(param(req, "pos")));
  });
  http_->Get("/api/yfm", [this](const httplib::Request& req, httplib::Response& res) {
    reply(res, api_.yfm(param(req, "shape")));
  });
  http_->Get("/api/sample", [this](const httplib::Request& req, httplib::Response& res) {
    reply(res, api_.sample(param(req, "pos"), param(req, "seed")));
  });
  if (options_.static_dir && !http_->set_mount_point("/", *options_.static_dir)) {
    throw invalid_input("static directory '" + *options_.static_dir + "' does not exist");
  }
}

Server::~Server() = default;

bool Server::listen() { return http_->listen(options_.bind, options_.port); }

int Server::bind_to_any_port() { return http_->bind_to_any_port(options_.bind); }

bool Server::listen_after_bind() { return http_->listen_after_bind(); }

void Server::stop() { http_->stop(); }

void Server::wait_until_ready() const { http_->wait_until_ready(); }

}  // namespace stanley
