#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "stanley/counting.hpp"

namespace stanley {

struct Mismatch {
  std::string input;
  std::string expected;
  std::string actual;
};

/// Result of one exhaustive identity sweep. `ok()` iff there were no mismatches.
struct VerificationReport {
  std::string name;
  std::vector<std::pair<std::string, std::int64_t>> bounds;
  std::size_t cases = 0;
  std::size_t mismatches = 0;
  std::vector<Mismatch> witnesses;

  bool ok() const noexcept { return mismatches == 0; }
  std::string summary() const;
};

// Desk-scale defaults.
inline constexpr std::uint64_t default_yfm_max_sum = 12;
inline constexpr std::uint64_t default_fact3_max_sum = 12;
inline constexpr std::uint64_t default_rearrange_max_sum = 10;
inline constexpr std::size_t default_rearrange_max_length = 4;
inline constexpr std::uint64_t default_witness_max_part = 6;
inline constexpr std::size_t default_staircase_max_n = 7;
inline constexpr std::uint64_t default_recurrence_max = 8;
inline constexpr std::uint64_t default_syt_max_sum = 10;
inline constexpr std::uint64_t default_enumeration_max_sum = 8;
inline constexpr std::size_t default_enumeration_max_length = 4;
inline constexpr std::size_t default_census_max_k = 7;

/// count_plays = yfm on every partition with 1 <= |a| <= max_sum.
VerificationReport verify_yfm(std::uint64_t max_sum, PlayCache& cache);
/// count_plays([b,c,a]) = fact_three_piles for a >= b >= c >= 1, a+b+c <= max_sum.
VerificationReport verify_fact3(std::uint64_t max_sum, PlayCache& cache);
/// count_plays(arrange(a, w)) = yfm(a) for every 231-avoiding w, plus the
/// [3,2,1] / 231 divergence case. With strict_only, partitions with repeated
/// parts are skipped.
///
/// Known failures at the default bounds: repeated parts from k = 3 on (e.g.
/// [2,2,1] by [1,3,2] gives 11, not 5), and [4,3,2,1] by [1,4,3,2] gives 1293,
/// not 768.
VerificationReport verify_rearrange(std::uint64_t max_sum, std::size_t max_length,
                                    PlayCache& cache, bool strict_only = false);
/// count_reduced_words(stanley_witness(a)) = yfm(a), strictly decreasing a, a_1 <= max_part.
VerificationReport verify_witness(std::uint64_t max_part);
/// Reduced words of [n..1] = yfm([n-1..1]) for 1 <= n <= max_n.
VerificationReport verify_staircase(std::size_t max_n);
/// The three two-pile recurrences, as stated, for 1 <= a2 <= a1 <= max.
/// The first one fails on the diagonal a1 = a2: the interior move is illegal
/// there, so S([a,a]) = S([a,0,a-1]) alone.
VerificationReport verify_recurrences(std::uint64_t max, PlayCache& cache);
/// count_syt_bruteforce = yfm for every partition with |a| <= max_sum.
VerificationReport verify_syt(std::uint64_t max_sum);
/// Number of enumerated plays = count_plays on every normalized position with
/// sum <= max_sum and length <= max_length; every play is checked structurally.
VerificationReport verify_enumeration(std::uint64_t max_sum, std::size_t max_length,
                                      PlayCache& cache);
/// Number of 231-avoiders in S_k = catalan(k) for 1 <= k <= max_k.
VerificationReport verify_census(std::size_t max_k);

/// Every normalized nonempty position with total <= max_sum and length <= max_length.
std::vector<Position> positions_up_to(std::uint64_t max_sum, std::size_t max_length);

}  // namespace stanley
