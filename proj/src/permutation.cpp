#include "stanley/permutation.hpp"

#include <algorithm>
#include <numeric>

#include <boost/container_hash/hash.hpp>

#include "stanley/errors.hpp"
#include "stanley/position.hpp"

namespace stanley {

Permutation::Permutation(std::vector<value_type> values) : values_(std::move(values)) {
  std::vector<bool> seen(values_.size() + 1, false);
  for (auto v : values_) {
    if (v < 1 || v > values_.size()) {
      throw precondition_error("permutation entry " + std::to_string(v) + " outside 1.." +
                               std::to_string(values_.size()));
    }
    if (seen[v]) throw precondition_error("permutation entry " + std::to_string(v) + " repeated");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<value_type> v(n);
  std::iota(v.begin(), v.end(), value_type{1});
  return Permutation(std::move(v));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] != i + 1) return false;
  }
  return true;
}

std::size_t Permutation::inversions() const noexcept {
  std::size_t count = 0;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    for (std::size_t j = i + 1; j < values_.size(); ++j) count += values_[i] > values_[j];
  }
  return count;
}

Permutation Permutation::times_adjacent(std::size_t i) const {
  if (i < 1 || i >= values_.size()) {
    throw precondition_error("adjacent transposition s_" + std::to_string(i) + " not in S_" +
                             std::to_string(values_.size()));
  }
  Permutation out = *this;
  std::swap(out.values_[i - 1], out.values_[i]);
  return out;
}

Permutation parse_permutation(std::string_view text) {
  const auto raw = parse_sequence(text);
  std::vector<Permutation::value_type> values;
  values.reserve(raw.size());
  for (auto v : raw) {
    if (v > raw.size()) {
      throw precondition_error("permutation entry " + std::to_string(v) + " outside 1.." +
                               std::to_string(raw.size()));
    }
    values.push_back(static_cast<Permutation::value_type>(v));
  }
  return Permutation(std::move(values));
}

std::string format_permutation(const Permutation& w) {
  std::vector<Pile> values(w.values().begin(), w.values().end());
  return format_sequence(values);
}

std::vector<Permutation> all_permutations(std::size_t k) {
  std::vector<Permutation::value_type> v(k);
  std::iota(v.begin(), v.end(), Permutation::value_type{1});
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

std::size_t PermutationHash::operator()(const Permutation& w) const noexcept {
  return boost::hash_range(w.values().begin(), w.values().end());
}

}  // namespace stanley
