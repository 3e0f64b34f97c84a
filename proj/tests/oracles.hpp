#pragma once

// Test-only reference implementations. Nothing here calls into the library's
// move generator, DP, or formula code.

#include <cstdint>
#include <map>
#include <queue>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Piles = std::vector<std::uint64_t>;
using Big = boost::multiprecision::cpp_int;

inline Piles trim(Piles v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  std::size_t lead = 0;
  while (lead < v.size() && v[lead] == 0) ++lead;
  return Piles(v.begin() + static_cast<std::ptrdiff_t>(lead), v.end());
}

// The two cases as they are written out in the rules: interior swaps for i < k,
// then the separate end move to [a_1, ..., a_{k-1}, 0, a_k - 1].
inline std::vector<Piles> children(const Piles& a) {
  std::vector<Piles> out;
  const auto k = a.size();
  for (std::size_t i = 0; i + 1 < k; ++i) {
    if (a[i] > a[i + 1]) {
      Piles c = a;
      c[i] = a[i + 1];
      c[i + 1] = a[i] - 1;
      out.push_back(trim(c));
    }
  }
  if (k > 0) {
    Piles c(a.begin(), a.end() - 1);
    c.push_back(0);
    c.push_back(a[k - 1] - 1);
    out.push_back(trim(c));
  }
  return out;
}

// Unmemoized leaf count of the game tree.
inline Big count_naive(const Piles& a) {
  if (a.empty()) return 1;
  Big total = 0;
  for (const auto& c : children(a)) total += count_naive(c);
  return total;
}

inline std::set<Piles> reachable(const Piles& start) {
  std::set<Piles> seen{start};
  std::queue<Piles> todo;
  todo.push(start);
  while (!todo.empty()) {
    auto cur = todo.front();
    todo.pop();
    for (auto& c : children(cur)) {
      if (seen.insert(c).second) todo.push(c);
    }
  }
  return seen;
}

// Hook length formula: n! / prod of hook lengths.
inline Big hook_length(const std::vector<std::uint64_t>& shape) {
  std::uint64_t n = 0;
  for (auto r : shape) n += r;
  Big num = 1;
  for (std::uint64_t i = 2; i <= n; ++i) num *= i;
  Big den = 1;
  for (std::size_t r = 0; r < shape.size(); ++r) {
    for (std::uint64_t c = 0; c < shape[r]; ++c) {
      std::uint64_t below = 0;
      for (std::size_t rr = r + 1; rr < shape.size() && shape[rr] > c; ++rr) ++below;
      den *= shape[r] - c - 1 + below + 1;
    }
  }
  return num / den;
}

inline Big binomial(std::uint64_t n, std::uint64_t k) {
  Big r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace oracle
