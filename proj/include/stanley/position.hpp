#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace stanley {

using Pile = std::uint64_t;

/// A normalized Stanley Solitaire position: pile sizes with both ends nonzero.
/// The empty position is the finished game.
class Position {
 public:
  Position() = default;

  /// Strips leading and trailing zeros. Interior zeros are kept.
  static Position normalize(std::span<const Pile> raw);
  static Position normalize(std::initializer_list<Pile> raw) {
    return normalize(std::span<const Pile>(raw.begin(), raw.size()));
  }
  /// Signed entry point; any negative entry is rejected with invalid_input.
  static Position normalize_signed(std::span<const std::int64_t> raw);

  std::span<const Pile> piles() const noexcept { return piles_; }
  std::size_t size() const noexcept { return piles_.size(); }
  bool empty() const noexcept { return piles_.empty(); }
  Pile operator[](std::size_t i) const { return piles_[i]; }

  std::uint64_t total_candies() const noexcept;

  friend bool operator==(const Position&, const Position&) = default;
  friend auto operator<=>(const Position&, const Position&) = default;

 private:
  explicit Position(std::vector<Pile> piles) : piles_(std::move(piles)) {}

  std::vector<Pile> piles_;
};

/// 1-based index i of the pair (a_i, a_{i+1}); i == size() is the end move
/// against the implicit empty pile on the right.
struct Move {
  std::size_t index = 0;

  friend bool operator==(const Move&, const Move&) = default;
};

struct MoveResult {
  Move move;
  Position child;

  friend bool operator==(const MoveResult&, const MoveResult&) = default;
};

bool is_legal(const Position& p, Move m) noexcept;

/// Every legal move with its normalized child, in ascending index order.
std::vector<MoveResult> legal_moves(const Position& p);

/// Throws illegal_move when the move is out of range or not a strict descent.
Position apply_move(const Position& p, Move m);

inline std::uint64_t total_candies(const Position& p) noexcept { return p.total_candies(); }

/// Accepts "[]", "2,2,1", "[2,2,1]" with optional whitespace around tokens.
/// The result is normalized.
Position parse_position(std::string_view text);

/// Canonical bracketed form, e.g. "[2,2,1]" or "[]".
std::string format_position(const Position& p);

/// The raw comma-separated grammar shared by positions, partitions and permutations.
std::vector<Pile> parse_sequence(std::string_view text);
std::string format_sequence(std::span<const Pile> values);

struct PositionHash {
  std::size_t operator()(const Position& p) const noexcept;
};

}  // namespace stanley
