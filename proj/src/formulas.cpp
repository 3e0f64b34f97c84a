#include "stanley/formulas.hpp"

#include <mutex>
#include <numeric>

#include "stanley/errors.hpp"

namespace stanley {

Partition::Partition(std::vector<Pile> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] == 0) {
      throw precondition_error("partition parts must be positive (part " + std::to_string(i + 1) +
                               " is 0)");
    }
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw precondition_error("partition must be weakly decreasing (part " +
                               std::to_string(i + 1) + " exceeds part " + std::to_string(i) + ")");
    }
  }
}

std::uint64_t Partition::sum() const noexcept {
  return std::accumulate(parts_.begin(), parts_.end(), std::uint64_t{0});
}

bool Partition::strictly_decreasing() const noexcept {
  for (std::size_t i = 1; i < parts_.size(); ++i) {
    if (parts_[i] >= parts_[i - 1]) return false;
  }
  return true;
}

Partition parse_partition(std::string_view text) { return Partition(parse_sequence(text)); }

std::string format_partition(const Partition& a) { return format_sequence(a.parts()); }

namespace {

void partitions_rec(std::uint64_t remaining, Pile max_part, std::vector<Pile>& prefix,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (Pile part = std::min<Pile>(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    partitions_rec(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

class FactorialTable {
 public:
  BigInt get(std::uint64_t n) {
    std::lock_guard lock(mutex_);
    while (table_.size() <= n) table_.push_back(table_.back() * table_.size());
    return table_[n];
  }

 private:
  std::mutex mutex_;
  std::vector<BigInt> table_{1};
};

BigInt require_integral(const BigRational& value, const char* what) {
  if (denominator(value) != 1 || value < 0) {
    throw integrality_error(std::string(what) + " is not a natural number: " + value.str());
  }
  return numerator(value);
}

}  // namespace

std::vector<Partition> partitions_of(std::uint64_t n) {
  std::vector<Partition> out;
  std::vector<Pile> prefix;
  partitions_rec(n, n, prefix, out);
  return out;
}

BigInt factorial(std::uint64_t n) {
  static FactorialTable table;
  return table.get(n);
}

PlayCount yfm(const Partition& a) {
  const auto k = static_cast<std::int64_t>(a.size());
  BigRational value = factorial(a.sum());
  for (std::int64_t i = 1; i <= k; ++i) {
    value /= factorial(a[i - 1] + static_cast<std::uint64_t>(k - i));
  }
  for (std::int64_t i = 1; i <= k; ++i) {
    for (std::int64_t j = i + 1; j <= k; ++j) {
      const auto ai = static_cast<std::int64_t>(a[i - 1]);
      const auto aj = static_cast<std::int64_t>(a[j - 1]);
      value *= ai - aj + j - i;
    }
  }
  return require_integral(value, "product formula value");
}

namespace {

struct TableauSearch {
  std::vector<std::size_t> row_lengths;
  std::vector<std::vector<std::uint32_t>> grid;
  std::vector<bool> used;
  PlayCount count = 0;

  void place(std::size_t row, std::size_t col) {
    if (row == row_lengths.size()) {
      ++count;
      return;
    }
    const auto [next_row, next_col] =
        col + 1 < row_lengths[row] ? std::pair{row, col + 1} : std::pair{row + 1, std::size_t{0}};

    std::uint32_t floor = 0;
    if (col > 0) floor = grid[row][col - 1];
    if (row > 0) floor = std::max(floor, grid[row - 1][col]);
    for (std::uint32_t v = floor + 1; v < used.size(); ++v) {
      if (used[v]) continue;
      used[v] = true;
      grid[row][col] = v;
      place(next_row, next_col);
      used[v] = false;
    }
  }
};

}  // namespace

PlayCount count_syt_bruteforce(const Partition& a, std::uint64_t bound) {
  const auto n = a.sum();
  if (n > bound) {
    throw bound_exceeded("tableau brute force limited to " + std::to_string(bound) +
                         " cells; shape has " + std::to_string(n));
  }
  if (n == 0) return 1;

  TableauSearch search;
  for (auto part : a.parts()) {
    search.row_lengths.push_back(part);
    search.grid.emplace_back(part, 0);
  }
  search.used.assign(n + 1, false);
  search.place(0, 0);
  return search.count;
}

std::string format_fact_polynomial() {
  std::string out;
  for (const auto& term : fact_polynomial) {
    std::string factors;
    const auto add = [&](char var, int exp) {
      if (exp == 0) return;
      if (!factors.empty()) factors += '*';
      factors += var;
      if (exp > 1) factors += "^" + std::to_string(exp);
    };
    add('a', term.a_exp);
    add('b', term.b_exp);
    add('c', term.c_exp);

    const int mag = std::abs(term.coefficient);
    if (out.empty()) {
      if (term.coefficient < 0) out += '-';
    } else {
      out += term.coefficient < 0 ? " - " : " + ";
    }
    if (factors.empty()) {
      out += std::to_string(mag);
    } else {
      if (mag != 1) out += std::to_string(mag) + "*";
      out += factors;
    }
  }
  return out;
}

PlayCount fact_three_piles(const ThreePiles& piles) {
  const auto [b, c, a] = piles;
  if (!(a >= b && b >= c && c >= 1)) {
    throw precondition_error("three-pile formula requires a >= b >= c >= 1 for position [b,c,a]; got b=" +
                             std::to_string(b) + ", c=" + std::to_string(c) +
                             ", a=" + std::to_string(a));
  }

  BigInt poly = 0;
  for (const auto& term : fact_polynomial) {
    BigInt t = term.coefficient;
    t *= boost::multiprecision::pow(BigInt(a), static_cast<unsigned>(term.a_exp));
    t *= boost::multiprecision::pow(BigInt(b), static_cast<unsigned>(term.b_exp));
    t *= boost::multiprecision::pow(BigInt(c), static_cast<unsigned>(term.c_exp));
    poly += t;
  }

  BigRational value = factorial(a + b + c);
  value /= factorial(a + 3);
  value /= factorial(b + 1);
  value /= factorial(c);
  value *= poly;
  value *= BigInt(a) - BigInt(b) + 2;
  return require_integral(value, "three-pile formula value");
}

bool is_231_avoiding(const PermutationPattern& w) {
  const auto k = w.size();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (w[j] <= w[i]) continue;
      for (std::size_t l = j + 1; l < k; ++l) {
        if (w[l] < w[i]) return false;
      }
    }
  }
  return true;
}

std::vector<PermutationPattern> avoiders_231(std::size_t k) {
  std::vector<PermutationPattern> out;
  for (auto& w : all_permutations(k)) {
    if (is_231_avoiding(w)) out.push_back(std::move(w));
  }
  return out;
}

PlayCount catalan(std::uint64_t k) {
  const BigInt num = factorial(2 * k);
  const BigInt den = factorial(k) * factorial(k + 1);
  if (num % den != 0) throw integrality_error("Catalan quotient is not integral");
  return num / den;
}

Position arrange(const Partition& a, const PermutationPattern& w) {
  if (a.size() != w.size()) {
    throw precondition_error("pattern length " + std::to_string(w.size()) +
                             " does not match partition length " + std::to_string(a.size()));
  }
  std::vector<Pile> piles;
  piles.reserve(a.size());
  for (auto v : w.values()) piles.push_back(a[v - 1]);
  return Position::normalize(piles);
}

}  // namespace stanley
