#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "stanley/formulas.hpp"
#include "stanley/verify.hpp"

using namespace stanley;

TEST_CASE("positions_up_to covers interior zeros and respects bounds") {
  const auto ps = positions_up_to(3, 3);
  // length 1: [1],[2],[3]; length 2: 3 with sum<=3 ([1,1],[1,2],[2,1]);
  // length 3 with positive ends: [1,0,1],[1,1,1],[1,0,2],[2,0,1]
  CHECK(ps.size() == 10);
  for (const auto& p : ps) {
    CHECK(p.total_candies() <= 3);
    CHECK(p.size() <= 3);
    CHECK(Position::normalize(p.piles()) == p);
  }
  CHECK(std::find(ps.begin(), ps.end(), Position::normalize({1, 0, 2})) != ps.end());
}

TEST_CASE("small sweeps pass and are reproducible") {
  PlayCache cache;
  const auto a = verify_yfm(7, cache);
  const auto b = verify_yfm(7, cache);
  CHECK(a.ok());
  CHECK(a.cases == 1 + 2 + 3 + 5 + 7 + 11 + 15);
  CHECK(a.summary() == b.summary());

  CHECK(verify_fact3(8, cache).ok());
  CHECK(verify_rearrange(10, 3, cache, true).ok());
  CHECK(verify_witness(4).ok());
  CHECK(verify_staircase(5).ok());
  CHECK(verify_syt(7).ok());
  CHECK(verify_enumeration(5, 3, cache).ok());
  CHECK(verify_census(6).ok());
}

TEST_CASE("witness sweep covers every strictly decreasing partition") {
  // Nonempty subsets of {1..4}.
  CHECK(verify_witness(4).cases == 15);
  CHECK(verify_staircase(7).cases == 7);
}

TEST_CASE("report summary format") {
  VerificationReport r{"demo", {{"max", 3}}, 4, 1, {{"x", "1", "2"}}};
  CHECK_FALSE(r.ok());
  CHECK(r.summary() == "demo: max=3 cases=4 mismatches=1");
}

TEST_CASE("rearrangement sweep reports exactly the oracle's failures") {
  // Independent recount: unmemoized play counts against the hook length formula.
  std::size_t expected_cases = 1;  // the 231 divergence case
  std::size_t expected_mismatches = 0;
  for (std::uint64_t n = 1; n <= 8; ++n) {
    for (const auto& a : partitions_of(n)) {
      if (a.size() > 4) continue;
      const std::vector<std::uint64_t> shape(a.parts().begin(), a.parts().end());
      const auto target = oracle::hook_length(shape);
      for (const auto& w : all_permutations(a.size())) {
        if (!is_231_avoiding(w)) continue;
        oracle::Piles arranged;
        for (auto v : w.values()) arranged.push_back(shape[v - 1]);
        ++expected_cases;
        expected_mismatches += oracle::count_naive(arranged) != target;
      }
    }
  }
  PlayCache cache;
  const auto r = verify_rearrange(8, 4, cache);
  CHECK(r.cases == expected_cases);
  CHECK(r.mismatches == expected_mismatches);
  CHECK(r.mismatches > 0);
  REQUIRE_FALSE(r.witnesses.empty());
  CHECK(r.witnesses.front().input == "[2,2,1] by [1,3,2]");
  CHECK(r.witnesses.front().actual == "11");

  // Distinct parts, k <= 3: the claim holds.
  CHECK(verify_rearrange(12, 3, cache, true).ok());
  // Distinct parts, k = 4: [4,3,2,1] by [1,4,3,2] is the first failure.
  const auto strict4 = verify_rearrange(10, 4, cache, true);
  CHECK(strict4.mismatches == 1);
  REQUIRE(strict4.witnesses.size() == 1);
  CHECK(strict4.witnesses.front().input == "[4,3,2,1] by [1,4,3,2]");
  CHECK(strict4.witnesses.front().actual == "1293");
}

TEST_CASE("recurrence sweep fails exactly on the diagonal") {
  PlayCache cache;
  const auto r = verify_recurrences(8, cache);
  // 36 pairs for the first identity, 28 off-diagonal pairs for each of the others.
  CHECK(r.cases == 36 + 28 + 28);
  CHECK(r.mismatches == 8);
  for (std::size_t a = 1; a <= r.witnesses.size(); ++a) {
    const auto& m = r.witnesses[a - 1];
    CHECK(m.input == "S([a1,a2]) a1=" + std::to_string(a) + ",a2=" + std::to_string(a));
  }
  // On the diagonal only the end move is legal.
  for (Pile a = 1; a <= 8; ++a) {
    CHECK(count_plays(Position::normalize({a, a}), cache) ==
          count_plays(Position::normalize({a, 0, a - 1}), cache));
  }
}
