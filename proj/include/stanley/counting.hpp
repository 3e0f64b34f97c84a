#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

#include "stanley/bigint.hpp"
#include "stanley/position.hpp"

namespace stanley {

/// A complete play: start position, each successor, ending in [].
using Play = std::vector<Position>;

struct CacheStats {
  std::size_t entries = 0;
  std::uint64_t hits = 0;
  std::uint64_t misses = 0;

  friend bool operator==(const CacheStats&, const CacheStats&) = default;
};

/// Memo table for play counts, keyed by the normalized position.
///
/// Safe to share between threads. A value, once stored, is never replaced, and
/// readers only ever see complete values. With an entry cap set, positions past
/// the cap are simply not stored and get recomputed on demand.
class PlayCache {
 public:
  PlayCache() = default;
  explicit PlayCache(std::optional<std::size_t> max_entries) : max_entries_(max_entries) {}

  PlayCache(const PlayCache&) = delete;
  PlayCache& operator=(const PlayCache&) = delete;

  std::optional<PlayCount> find(const Position& p) const;
  void insert(const Position& p, const PlayCount& value);

  CacheStats stats() const;
  void clear();

  std::optional<std::size_t> max_entries() const noexcept { return max_entries_; }

 private:
  std::optional<std::size_t> max_entries_;
  mutable std::shared_mutex mutex_;
  std::unordered_map<Position, PlayCount, PositionHash> table_;
  mutable std::atomic<std::uint64_t> hits_{0};
  mutable std::atomic<std::uint64_t> misses_{0};
};

/// S(p): S([]) = 1, otherwise the sum of S over the children of p.
PlayCount count_plays(const Position& p, PlayCache& cache);
PlayCount count_plays(const Position& p);

inline CacheStats cache_stats(const PlayCache& cache) { return cache.stats(); }
inline void clear_cache(PlayCache& cache) { cache.clear(); }

/// All complete plays in depth-first order, children in ascending move index.
/// Throws limit_exceeded (carrying the exact count) when there are more than `limit`.
std::vector<Play> enumerate_plays(const Position& p, std::uint64_t limit, PlayCache& cache);
std::vector<Play> enumerate_plays(const Position& p, std::uint64_t limit);

/// Move-index form of a play (the 1-based index chosen at each step).
std::vector<std::size_t> play_moves(const Play& play);

using Rng = std::mt19937_64;

/// One play drawn uniformly from all S(p) plays: each step picks child c with
/// probability S(c) / S(current).
Play sample_play(const Position& p, Rng& rng, PlayCache& cache);

/// Structural check: starts at `start`, each step is a legal move, ends at [].
bool is_valid_play(const Play& play, const Position& start);

}  // namespace stanley
