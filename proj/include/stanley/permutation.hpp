#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace stanley {

/// A bijection on {1..n} in one-line notation.
class Permutation {
 public:
  using value_type = std::uint32_t;

  Permutation() = default;

  /// Throws precondition_error unless every value 1..n appears exactly once.
  explicit Permutation(std::vector<value_type> values);
  Permutation(std::initializer_list<value_type> values)
      : Permutation(std::vector<value_type>(values)) {}

  static Permutation identity(std::size_t n);

  std::span<const value_type> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  value_type operator[](std::size_t i) const { return values_[i]; }

  bool is_identity() const noexcept;
  std::size_t inversions() const noexcept;

  /// Right multiplication by s_i = (i, i+1): swaps entries i and i+1 (1-based).
  Permutation times_adjacent(std::size_t i) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<value_type> values_;
};

using PermutationPattern = Permutation;

/// Comma-separated one-line notation, brackets optional.
Permutation parse_permutation(std::string_view text);
std::string format_permutation(const Permutation& w);

/// All of S_k in lexicographic order.
std::vector<Permutation> all_permutations(std::size_t k);

struct PermutationHash {
  std::size_t operator()(const Permutation& w) const noexcept;
};

}  // namespace stanley
