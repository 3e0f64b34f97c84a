#include "stanley/counting.hpp"

#include <mutex>

#include <boost/multiprecision/random.hpp>
#include <boost/random/uniform_int_distribution.hpp>

#include "stanley/errors.hpp"

namespace stanley {

std::optional<PlayCount> PlayCache::find(const Position& p) const {
  std::shared_lock lock(mutex_);
  if (auto it = table_.find(p); it != table_.end()) {
    hits_.fetch_add(1, std::memory_order_relaxed);
    return it->second;
  }
  misses_.fetch_add(1, std::memory_order_relaxed);
  return std::nullopt;
}

void PlayCache::insert(const Position& p, const PlayCount& value) {
  std::unique_lock lock(mutex_);
  if (max_entries_ && table_.size() >= *max_entries_) return;
  table_.try_emplace(p, value);
}

CacheStats PlayCache::stats() const {
  std::shared_lock lock(mutex_);
  return {table_.size(), hits_.load(), misses_.load()};
}

void PlayCache::clear() {
  std::unique_lock lock(mutex_);
  table_.clear();
  hits_ = 0;
  misses_ = 0;
}

PlayCount count_plays(const Position& p, PlayCache& cache) {
  if (auto hit = cache.find(p)) return *std::move(hit);
  PlayCount total = p.empty() ? 1 : 0;
  for (const auto& [move, child] : legal_moves(p)) total += count_plays(child, cache);
  cache.insert(p, total);
  return total;
}

PlayCount count_plays(const Position& p) {
  PlayCache cache;
  return count_plays(p, cache);
}

namespace {

void enumerate_from(const Position& p, Play& prefix, std::vector<Play>& out) {
  prefix.push_back(p);
  if (p.empty()) {
    out.push_back(prefix);
  } else {
    for (const auto& [move, child] : legal_moves(p)) enumerate_from(child, prefix, out);
  }
  prefix.pop_back();
}

}  // namespace

std::vector<Play> enumerate_plays(const Position& p, std::uint64_t limit, PlayCache& cache) {
  if (limit == 0) throw precondition_error("enumeration limit must be positive");
  const PlayCount count = count_plays(p, cache);
  if (count > limit) throw limit_exceeded(count, std::to_string(limit));

  std::vector<Play> out;
  out.reserve(count.convert_to<std::size_t>());
  Play prefix;
  prefix.reserve(p.total_candies() + 1);
  enumerate_from(p, prefix, out);
  return out;
}

std::vector<Play> enumerate_plays(const Position& p, std::uint64_t limit) {
  PlayCache cache;
  return enumerate_plays(p, limit, cache);
}

std::vector<std::size_t> play_moves(const Play& play) {
  std::vector<std::size_t> moves;
  for (std::size_t s = 0; s + 1 < play.size(); ++s) {
    for (const auto& [move, child] : legal_moves(play[s])) {
      if (child == play[s + 1]) {
        moves.push_back(move.index);
        break;
      }
    }
  }
  return moves;
}

Play sample_play(const Position& p, Rng& rng, PlayCache& cache) {
  Play play{p};
  Position current = p;
  while (!current.empty()) {
    const PlayCount here = count_plays(current, cache);
    boost::random::uniform_int_distribution<BigInt> pick(0, here - 1);
    BigInt r = pick(rng);

    auto moves = legal_moves(current);
    Position next = moves.back().child;
    for (auto& [move, child] : moves) {
      const PlayCount weight = count_plays(child, cache);
      if (r < weight) {
        next = std::move(child);
        break;
      }
      r -= weight;
    }
    play.push_back(next);
    current = std::move(next);
  }
  return play;
}

bool is_valid_play(const Play& play, const Position& start) {
  if (play.empty() || play.front() != start || !play.back().empty()) return false;
  if (play.size() != start.total_candies() + 1) return false;
  for (std::size_t s = 0; s + 1 < play.size(); ++s) {
    bool found = false;
    for (const auto& [move, child] : legal_moves(play[s])) {
      if (child == play[s + 1]) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace stanley
