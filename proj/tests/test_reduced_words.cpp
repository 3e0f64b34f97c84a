#include <doctest.h>

#include "stanley/errors.hpp"
#include "stanley/formulas.hpp"
#include "stanley/reduced_words.hpp"

using namespace stanley;

TEST_CASE("Permutation validation and parsing") {
  CHECK_THROWS_AS(Permutation({1, 1, 2}), precondition_error);
  CHECK_THROWS_AS(Permutation({0, 1}), precondition_error);
  CHECK_THROWS_AS(parse_permutation("1,5"), precondition_error);
  CHECK(parse_permutation("4,2,1,3") == Permutation{4, 2, 1, 3});
  CHECK(format_permutation(Permutation{4, 2, 1, 3}) == "[4,2,1,3]");
  CHECK(Permutation{3, 1, 2}.times_adjacent(1) == Permutation{1, 3, 2});
  CHECK(Permutation{4, 2, 1, 3}.inversions() == 4);
}

TEST_CASE("count_reduced_words examples") {
  CHECK(count_reduced_words({2, 1}) == 1);
  CHECK(count_reduced_words({3, 2, 1}) == 2);
  CHECK(count_reduced_words({4, 2, 1, 3}) == 3);
  CHECK(count_reduced_words(longest_permutation(4)) == 16);
  CHECK(count_reduced_words(Permutation::identity(5)) == 1);
  CHECK(count_reduced_words(Permutation{}) == 1);
}

TEST_CASE("descent recursion agrees with exhaustive word search for n <= 4") {
  ReducedWordCache cache;
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& w : all_permutations(n)) {
      CAPTURE(format_permutation(w));
      const auto r = count_reduced_words(w, cache);
      CHECK(r == count_reduced_words_bruteforce(w));
      CHECK(r >= 1);
    }
  }
  CHECK_THROWS_AS(count_reduced_words_bruteforce(longest_permutation(5)), bound_exceeded);
}

TEST_CASE("longest_permutation") {
  CHECK(longest_permutation(1) == Permutation{1});
  CHECK(longest_permutation(3) == Permutation{3, 2, 1});
  CHECK(longest_permutation(5) == Permutation{5, 4, 3, 2, 1});
  CHECK_THROWS_AS(longest_permutation(0), precondition_error);
}

TEST_CASE("stanley_witness instantiation") {
  CHECK(stanley_witness({2, 1}) == Permutation{3, 2, 1});
  CHECK(stanley_witness({3, 1}) == Permutation{4, 2, 1, 3});
  CHECK(stanley_witness({3, 2}) == Permutation{4, 3, 1, 2});
  CHECK(stanley_witness({1}) == Permutation{2, 1});
  CHECK(stanley_witness({5, 2}) == Permutation{6, 3, 1, 2, 4, 5});
  CHECK_THROWS_AS(stanley_witness({2, 2}), precondition_error);
  CHECK_THROWS_AS(stanley_witness({}), precondition_error);
}

TEST_CASE("witness and staircase identities at small size") {
  for (const Partition a : {Partition{1}, Partition{2, 1}, Partition{3, 1}, Partition{4, 2, 1}}) {
    CHECK(count_reduced_words(stanley_witness(a)) == yfm(a));
  }
  for (std::size_t n = 2; n <= 5; ++n) {
    std::vector<Pile> stair;
    for (auto v = n - 1; v >= 1; --v) stair.push_back(v);
    CHECK(count_reduced_words(longest_permutation(n)) == count_syt_bruteforce(Partition(stair)));
  }
}
