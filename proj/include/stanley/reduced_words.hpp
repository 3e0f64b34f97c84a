#pragma once

#include <cstddef>
#include <optional>
#include <shared_mutex>
#include <unordered_map>

#include "stanley/bigint.hpp"
#include "stanley/formulas.hpp"
#include "stanley/permutation.hpp"

namespace stanley {

/// Memo table for reduced-word counts. Same contract as PlayCache: shareable,
/// values are write-once.
class ReducedWordCache {
 public:
  ReducedWordCache() = default;
  ReducedWordCache(const ReducedWordCache&) = delete;
  ReducedWordCache& operator=(const ReducedWordCache&) = delete;

  std::optional<BigInt> find(const Permutation& w) const;
  void insert(const Permutation& w, const BigInt& value);
  std::size_t size() const;

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<Permutation, BigInt, PermutationHash> table_;
};

/// Number of reduced decompositions of w into adjacent transpositions, via
/// R(id) = 1, R(w) = sum over descents i of R(w * s_i).
BigInt count_reduced_words(const Permutation& w, ReducedWordCache& cache);
BigInt count_reduced_words(const Permutation& w);

/// Exhaustive search over all words of length inv(w) in s_1..s_{n-1}.
/// Independent of the descent recursion; limited to n <= 4.
BigInt count_reduced_words_bruteforce(const Permutation& w);

/// [n, n-1, ..., 1]
Permutation longest_permutation(std::size_t n);

/// For a_1 > a_2 > ... > a_k >= 1, the permutation of {1..a_1+1}
///   a_1+1, ..., a_k+1, 1..a_k, then for j = k..2 the run a_j+2 .. a_{j-1}.
/// Its reduced-word count equals yfm(a).
Permutation stanley_witness(const Partition& a);

}  // namespace stanley
