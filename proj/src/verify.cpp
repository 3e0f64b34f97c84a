#include "stanley/verify.hpp"

#include "stanley/formulas.hpp"
#include "stanley/reduced_words.hpp"

namespace stanley {

namespace {

constexpr std::size_t max_witnesses = 20;

void record(VerificationReport& report, bool ok, std::string input, const BigInt& expected,
            const BigInt& actual) {
  ++report.cases;
  if (ok) return;
  ++report.mismatches;
  if (report.witnesses.size() < max_witnesses) {
    report.witnesses.push_back({std::move(input), expected.str(), actual.str()});
  }
}

void check_equal(VerificationReport& report, std::string input, const BigInt& expected,
                 const BigInt& actual) {
  record(report, expected == actual, std::move(input), expected, actual);
}

template <class T>
std::int64_t as_bound(T v) {
  return static_cast<std::int64_t>(v);
}

void positions_rec(std::uint64_t budget, std::size_t max_length, std::vector<Pile>& prefix,
                   std::vector<Position>& out) {
  if (!prefix.empty() && prefix.back() > 0) out.push_back(Position::normalize(prefix));
  if (prefix.size() == max_length) return;
  const Pile first = prefix.empty() ? 1 : 0;
  for (Pile v = first; v <= budget; ++v) {
    prefix.push_back(v);
    positions_rec(budget - v, max_length, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::string VerificationReport::summary() const {
  std::string out = name + ":";
  for (const auto& [key, value] : bounds) out += " " + key + "=" + std::to_string(value);
  out += " cases=" + std::to_string(cases) + " mismatches=" + std::to_string(mismatches);
  return out;
}

std::vector<Position> positions_up_to(std::uint64_t max_sum, std::size_t max_length) {
  std::vector<Position> out;
  std::vector<Pile> prefix;
  positions_rec(max_sum, max_length, prefix, out);
  return out;
}

VerificationReport verify_yfm(std::uint64_t max_sum, PlayCache& cache) {
  VerificationReport report{"yfm", {{"max_sum", as_bound(max_sum)}}, 0, 0, {}};
  for (std::uint64_t n = 1; n <= max_sum; ++n) {
    for (const auto& a : partitions_of(n)) {
      check_equal(report, format_partition(a), yfm(a), count_plays(a.as_position(), cache));
    }
  }
  return report;
}

VerificationReport verify_fact3(std::uint64_t max_sum, PlayCache& cache) {
  VerificationReport report{"fact3", {{"max_sum", as_bound(max_sum)}}, 0, 0, {}};
  for (std::uint64_t a = 1; a <= max_sum; ++a) {
    for (std::uint64_t b = 1; b <= a; ++b) {
      for (std::uint64_t c = 1; c <= b && a + b + c <= max_sum; ++c) {
        const auto pos = Position::normalize({b, c, a});
        check_equal(report, format_position(pos), fact_three_piles({.b = b, .c = c, .a = a}),
                    count_plays(pos, cache));
      }
    }
  }
  return report;
}

VerificationReport verify_rearrange(std::uint64_t max_sum, std::size_t max_length,
                                    PlayCache& cache, bool strict_only) {
  VerificationReport report{"rearrange",
                            {{"max_sum", as_bound(max_sum)},
                             {"max_length", as_bound(max_length)},
                             {"strict_only", strict_only ? 1 : 0}},
                            0,
                            0,
                            {}};
  std::vector<std::vector<PermutationPattern>> avoiders(max_length + 1);
  for (std::size_t k = 1; k <= max_length; ++k) avoiders[k] = avoiders_231(k);

  for (std::uint64_t n = 1; n <= max_sum; ++n) {
    for (const auto& a : partitions_of(n)) {
      if (a.size() > max_length || (strict_only && !a.strictly_decreasing())) continue;
      const PlayCount expected = yfm(a);
      for (const auto& w : avoiders[a.size()]) {
        const auto pos = arrange(a, w);
        check_equal(report, format_partition(a) + " by " + format_permutation(w), expected,
                    count_plays(pos, cache));
      }
    }
  }

  // 231 itself must break the identity on [3,2,1].
  const Partition shape{3, 2, 1};
  const auto diverging = count_plays(arrange(shape, PermutationPattern{2, 3, 1}), cache);
  record(report, diverging == 26 && diverging != yfm(shape),
         "[3,2,1] by [2,3,1] (must differ from yfm)", 26, diverging);
  return report;
}

VerificationReport verify_witness(std::uint64_t max_part) {
  VerificationReport report{"witness", {{"max_part", as_bound(max_part)}}, 0, 0, {}};
  ReducedWordCache cache;
  // Strictly decreasing partitions with largest part <= max_part are the
  // nonempty subsets of {1..max_part}.
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << max_part); ++mask) {
    std::vector<Pile> parts;
    for (std::uint64_t v = max_part; v >= 1; --v) {
      if (mask & (std::uint64_t{1} << (v - 1))) parts.push_back(v);
    }
    const Partition a(parts);
    const auto w = stanley_witness(a);
    check_equal(report, format_partition(a) + " -> " + format_permutation(w), yfm(a),
                count_reduced_words(w, cache));
  }
  return report;
}

VerificationReport verify_staircase(std::size_t max_n) {
  VerificationReport report{"staircase", {{"max_n", as_bound(max_n)}}, 0, 0, {}};
  ReducedWordCache cache;
  for (std::size_t n = 1; n <= max_n; ++n) {
    std::vector<Pile> parts;
    for (std::size_t v = n - 1; v >= 1; --v) parts.push_back(v);
    const Partition staircase(parts);
    check_equal(report, "n=" + std::to_string(n), yfm(staircase),
                count_reduced_words(longest_permutation(n), cache));
  }
  return report;
}

VerificationReport verify_recurrences(std::uint64_t max, PlayCache& cache) {
  VerificationReport report{"recurrences", {{"max", as_bound(max)}}, 0, 0, {}};
  const auto S = [&](std::initializer_list<Pile> piles) {
    return count_plays(Position::normalize(piles), cache);
  };
  for (std::uint64_t a1 = 1; a1 <= max; ++a1) {
    for (std::uint64_t a2 = 1; a2 <= a1; ++a2) {
      const std::string tag = "a1=" + std::to_string(a1) + ",a2=" + std::to_string(a2);
      check_equal(report, "S([a1,a2]) " + tag, S({a2, a1 - 1}) + S({a1, 0, a2 - 1}),
                  S({a1, a2}));
      if (a2 < a1) {
        check_equal(report, "S([a2,a1]) " + tag, S({a2, 0, a1 - 1}), S({a2, a1}));
        check_equal(report, "S([a1,0,a2]) " + tag, S({a1 - 1, a2}) + S({a1, 0, 0, a2 - 1}),
                    S({a1, 0, a2}));
      }
    }
  }
  return report;
}

VerificationReport verify_syt(std::uint64_t max_sum) {
  VerificationReport report{"syt", {{"max_sum", as_bound(max_sum)}}, 0, 0, {}};
  for (std::uint64_t n = 1; n <= max_sum; ++n) {
    for (const auto& a : partitions_of(n)) {
      check_equal(report, format_partition(a), yfm(a), count_syt_bruteforce(a, max_sum));
    }
  }
  return report;
}

VerificationReport verify_enumeration(std::uint64_t max_sum, std::size_t max_length,
                                      PlayCache& cache) {
  VerificationReport report{
      "enumeration", {{"max_sum", as_bound(max_sum)}, {"max_length", as_bound(max_length)}}, 0, 0, {}};
  for (const auto& p : positions_up_to(max_sum, max_length)) {
    const PlayCount expected = count_plays(p, cache);
    const auto plays = enumerate_plays(p, expected.convert_to<std::uint64_t>(), cache);
    bool structural = true;
    for (const auto& play : plays) structural = structural && is_valid_play(play, p);
    const BigInt actual = plays.size();
    record(report, structural && actual == expected, format_position(p), expected, actual);
  }
  return report;
}

VerificationReport verify_census(std::size_t max_k) {
  VerificationReport report{"census", {{"max_k", as_bound(max_k)}}, 0, 0, {}};
  for (std::size_t k = 1; k <= max_k; ++k) {
    check_equal(report, "k=" + std::to_string(k), catalan(k), avoiders_231(k).size());
  }
  return report;
}

}  // namespace stanley
