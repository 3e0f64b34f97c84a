#include "stanley/reduced_words.hpp"

#include <mutex>

#include "stanley/errors.hpp"

namespace stanley {

std::optional<BigInt> ReducedWordCache::find(const Permutation& w) const {
  std::shared_lock lock(mutex_);
  if (auto it = table_.find(w); it != table_.end()) return it->second;
  return std::nullopt;
}

void ReducedWordCache::insert(const Permutation& w, const BigInt& value) {
  std::unique_lock lock(mutex_);
  table_.try_emplace(w, value);
}

std::size_t ReducedWordCache::size() const {
  std::shared_lock lock(mutex_);
  return table_.size();
}

BigInt count_reduced_words(const Permutation& w, ReducedWordCache& cache) {
  if (w.is_identity()) return 1;
  if (auto hit = cache.find(w)) return *std::move(hit);
  BigInt total = 0;
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i - 1] > w[i]) total += count_reduced_words(w.times_adjacent(i), cache);
  }
  cache.insert(w, total);
  return total;
}

BigInt count_reduced_words(const Permutation& w) {
  ReducedWordCache cache;
  return count_reduced_words(w, cache);
}

BigInt count_reduced_words_bruteforce(const Permutation& w) {
  const auto n = w.size();
  if (n > 4) throw bound_exceeded("brute-force reduced-word search limited to n <= 4");
  if (n <= 1) return 1;

  const auto length = w.inversions();
  const auto generators = n - 1;
  std::size_t words = 1;
  for (std::size_t s = 0; s < length; ++s) words *= generators;

  BigInt count = 0;
  for (std::size_t code = 0; code < words; ++code) {
    Permutation product = Permutation::identity(n);
    std::size_t rest = code;
    for (std::size_t s = 0; s < length; ++s) {
      product = product.times_adjacent(rest % generators + 1);
      rest /= generators;
    }
    if (product == w) ++count;
  }
  return count;
}

Permutation longest_permutation(std::size_t n) {
  if (n < 1) throw precondition_error("longest permutation requires n >= 1");
  std::vector<Permutation::value_type> v;
  for (auto x = n; x >= 1; --x) v.push_back(static_cast<Permutation::value_type>(x));
  return Permutation(std::move(v));
}

Permutation stanley_witness(const Partition& a) {
  if (a.size() == 0 || !a.strictly_decreasing()) {
    throw precondition_error("witness construction requires a nonempty strictly decreasing partition");
  }
  using V = Permutation::value_type;
  const auto k = a.size();
  std::vector<V> v;
  v.reserve(a[0] + 1);
  for (std::size_t j = 0; j < k; ++j) v.push_back(static_cast<V>(a[j] + 1));
  for (V x = 1; x <= a[k - 1]; ++x) v.push_back(x);
  for (std::size_t j = k - 1; j >= 1; --j) {
    for (auto x = a[j] + 2; x <= a[j - 1]; ++x) v.push_back(static_cast<V>(x));
  }
  return Permutation(std::move(v));
}

}  // namespace stanley
