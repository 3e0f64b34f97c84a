#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stanley/bigint.hpp"
#include "stanley/permutation.hpp"
#include "stanley/position.hpp"

namespace stanley {

/// Weakly decreasing sequence of positive parts. May be empty.
class Partition {
 public:
  Partition() = default;
  /// Throws precondition_error on a zero part or an increase.
  explicit Partition(std::vector<Pile> parts);
  Partition(std::initializer_list<Pile> parts) : Partition(std::vector<Pile>(parts)) {}

  std::span<const Pile> parts() const noexcept { return parts_; }
  std::size_t size() const noexcept { return parts_.size(); }
  Pile operator[](std::size_t i) const { return parts_[i]; }
  std::uint64_t sum() const noexcept;
  bool strictly_decreasing() const noexcept;

  Position as_position() const { return Position::normalize(parts_); }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<Pile> parts_;
};

Partition parse_partition(std::string_view text);
std::string format_partition(const Partition& a);

/// All partitions of n, largest first part first.
std::vector<Partition> partitions_of(std::uint64_t n);

/// n!, from a process-wide table that grows on demand. Thread-safe.
BigInt factorial(std::uint64_t n);

/// The product formula
///   (a_1+...+a_k)! / prod_i (a_i + k - i)!  *  prod_{i<j} (a_i - a_j + j - i),
/// evaluated exactly. Throws integrality_error if the quotient is not a natural number.
PlayCount yfm(const Partition& a);

inline constexpr std::uint64_t default_syt_bound = 12;

/// Standard Young tableaux of shape a, by backtracking over cells in row-major
/// order. Throws bound_exceeded when |a| > bound.
PlayCount count_syt_bruteforce(const Partition& a, std::uint64_t bound = default_syt_bound);

/// Piles in board order: the position is [b, c, a] with a >= b >= c >= 1.
struct ThreePiles {
  std::uint64_t b = 0;
  std::uint64_t c = 0;
  std::uint64_t a = 0;
};

/// coefficient * a^a_exp * b^b_exp * c^c_exp
struct FactTerm {
  int coefficient;
  int a_exp;
  int b_exp;
  int c_exp;
};

// clang-format off
inline constexpr std::array<FactTerm, 17> fact_polynomial{{
    { 1, 2, 1, 0},  // a^2 b
    {-1, 2, 0, 1},  // -a^2 c
    { 1, 1, 2, 0},  // a b^2
    {-2, 1, 1, 1},  // -2 a b c
    { 1, 1, 0, 2},  // a c^2
    {-1, 0, 2, 1},  // -b^2 c
    { 1, 0, 1, 2},  // b c^2
    { 1, 2, 0, 0},  // a^2
    { 5, 1, 1, 0},  // 5 a b
    {-6, 1, 0, 1},  // -6 a c
    { 3, 0, 2, 0},  // 3 b^2
    {-6, 0, 1, 1},  // -6 b c
    { 3, 0, 0, 2},  // 3 c^2
    { 4, 1, 0, 0},  // 4 a
    { 6, 0, 1, 0},  // 6 b
    {-9, 0, 0, 1},  // -9 c
    { 3, 0, 0, 0},  // 3
}};
// clang-format on

/// The polynomial factor as text, e.g. "a^2*b - a^2*c + ... + 3".
std::string format_fact_polynomial();

/// Closed form for S([b,c,a]):
///   (a+b+c)! / ((a+3)! (b+1)! c!) * poly(a,b,c) * (a - b + 2).
/// Requires a >= b >= c >= 1.
PlayCount fact_three_piles(const ThreePiles& piles);

/// No i < j < l with w_l < w_i < w_j.
bool is_231_avoiding(const PermutationPattern& w);

/// All 231-avoiders in S_k, lexicographic.
std::vector<PermutationPattern> avoiders_231(std::size_t k);

/// (2k)! / (k! (k+1)!)
PlayCount catalan(std::uint64_t k);

/// The position [a_{w_1}, ..., a_{w_k}].
Position arrange(const Partition& a, const PermutationPattern& w);

}  // namespace stanley
