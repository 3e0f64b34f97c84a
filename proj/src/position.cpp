#include "stanley/position.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include <boost/container_hash/hash.hpp>

#include "stanley/errors.hpp"

namespace stanley {

Position Position::normalize(std::span<const Pile> raw) {
  auto first = std::find_if(raw.begin(), raw.end(), [](Pile v) { return v != 0; });
  if (first == raw.end()) return Position{};
  auto last = std::find_if(raw.rbegin(), raw.rend(), [](Pile v) { return v != 0; }).base();
  return Position(std::vector<Pile>(first, last));
}

Position Position::normalize_signed(std::span<const std::int64_t> raw) {
  std::vector<Pile> piles;
  piles.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i] < 0) {
      throw invalid_input("negative pile size " + std::to_string(raw[i]) + " at index " +
                          std::to_string(i));
    }
    piles.push_back(static_cast<Pile>(raw[i]));
  }
  return normalize(piles);
}

std::uint64_t Position::total_candies() const noexcept {
  return std::accumulate(piles_.begin(), piles_.end(), std::uint64_t{0});
}

bool is_legal(const Position& p, Move m) noexcept {
  const auto k = p.size();
  if (m.index < 1 || m.index > k) return false;
  const Pile right = m.index == k ? 0 : p[m.index];
  return p[m.index - 1] > right;
}

namespace {

// Assumes legality has been checked.
Position child_of(const Position& p, std::size_t index) {
  std::vector<Pile> raw(p.piles().begin(), p.piles().end());
  if (index == raw.size()) raw.push_back(0);
  const Pile left = raw[index - 1];
  raw[index - 1] = raw[index];
  raw[index] = left - 1;
  return Position::normalize(raw);
}

}  // namespace

std::vector<MoveResult> legal_moves(const Position& p) {
  std::vector<MoveResult> out;
  for (std::size_t i = 1; i <= p.size(); ++i) {
    if (is_legal(p, Move{i})) out.push_back({Move{i}, child_of(p, i)});
  }
  return out;
}

Position apply_move(const Position& p, Move m) {
  if (m.index < 1 || m.index > p.size()) {
    throw illegal_move(m.index, "index out of range 1.." + std::to_string(p.size()));
  }
  if (!is_legal(p, m)) {
    throw illegal_move(m.index, "left pile is not strictly larger than right pile");
  }
  return child_of(p, m.index);
}

std::vector<Pile> parse_sequence(std::string_view text) {
  std::size_t pos = 0;
  const auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };

  skip_ws();
  const bool bracketed = pos < text.size() && text[pos] == '[';
  if (bracketed) ++pos;
  skip_ws();

  std::vector<Pile> values;
  if (bracketed && pos < text.size() && text[pos] == ']') {
    ++pos;
    skip_ws();
    if (pos != text.size()) throw parse_error(pos, "trailing characters after ']'");
    return values;
  }

  while (true) {
    skip_ws();
    if (pos >= text.size() || text[pos] < '0' || text[pos] > '9') {
      throw parse_error(pos, "expected a non-negative integer");
    }
    Pile v = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), v);
    if (ec == std::errc::result_out_of_range) throw parse_error(pos, "integer out of range");
    pos = static_cast<std::size_t>(ptr - text.data());
    values.push_back(v);
    skip_ws();
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      continue;
    }
    break;
  }

  if (bracketed) {
    if (pos >= text.size() || text[pos] != ']') throw parse_error(pos, "expected ']'");
    ++pos;
    skip_ws();
  }
  if (pos != text.size()) throw parse_error(pos, "unexpected character");
  return values;
}

std::string format_sequence(std::span<const Pile> values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  out += ']';
  return out;
}

Position parse_position(std::string_view text) { return Position::normalize(parse_sequence(text)); }

std::string format_position(const Position& p) { return format_sequence(p.piles()); }

std::size_t PositionHash::operator()(const Position& p) const noexcept {
  return boost::hash_range(p.piles().begin(), p.piles().end());
}

}  // namespace stanley
