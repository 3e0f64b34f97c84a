#include "stanley/guess.hpp"

#include <algorithm>
#include <tuple>

#include "stanley/errors.hpp"
#include "stanley/formulas.hpp"

namespace stanley {

bool Template::admits(std::uint64_t x, std::uint64_t y) const noexcept {
  if (x < 1 || y < 1) return false;
  switch (order) {
    case Order::greater:
      return x > y;
    case Order::less:
      return x < y;
    case Order::greater_equal:
      return x >= y;
  }
  return false;
}

Position Template::instantiate(std::uint64_t x, std::uint64_t y) const {
  if (!admits(x, y)) {
    throw precondition_error("(" + std::to_string(x) + "," + std::to_string(y) +
                             ") violates template constraint " + constraint());
  }
  std::vector<Pile> piles(gap + 2, 0);
  piles.front() = x;
  piles.back() = y;
  return Position::normalize(piles);
}

std::string Template::shape() const {
  std::string out = "[x,";
  for (std::size_t i = 0; i < gap; ++i) out += "0,";
  return out + "y]";
}

std::string Template::constraint() const {
  switch (order) {
    case Order::greater:
      return "x > y >= 1";
    case Order::less:
      return "y > x >= 1";
    case Order::greater_equal:
      return "x >= y >= 1";
  }
  return {};
}

Order parse_order(std::string_view text) {
  if (text == "gt" || text == ">") return Order::greater;
  if (text == "lt" || text == "<") return Order::less;
  if (text == "ge" || text == ">=") return Order::greater_equal;
  throw parse_error(0, "unknown order '" + std::string(text) + "' (expected gt, lt or ge)");
}

std::vector<GridPoint> template_grid(const Template& t, std::uint64_t max) {
  std::vector<GridPoint> out;
  for (std::uint64_t x = 1; x <= max; ++x) {
    for (std::uint64_t y = 1; y <= max; ++y) {
      if (t.admits(x, y)) out.push_back({x, y});
    }
  }
  return out;
}

std::vector<std::pair<unsigned, unsigned>> monomial_basis(unsigned degree) {
  std::vector<std::pair<unsigned, unsigned>> basis;
  for (unsigned total = 0; total <= degree; ++total) {
    for (unsigned i = 0; i <= total; ++i) basis.emplace_back(i, total - i);
  }
  return basis;
}

std::optional<std::vector<BigRational>> solve_exact(std::vector<std::vector<BigRational>> a,
                                                    std::vector<BigRational> rhs) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a.front().size() : 0;
  std::vector<std::size_t> pivot_cols;

  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[r]);
    std::swap(rhs[pivot], rhs[r]);

    const BigRational inv = 1 / a[r][c];
    for (std::size_t cc = c; cc < cols; ++cc) a[r][cc] *= inv;
    rhs[r] *= inv;

    for (std::size_t rr = 0; rr < rows; ++rr) {
      if (rr == r || a[rr][c] == 0) continue;
      const BigRational factor = a[rr][c];
      for (std::size_t cc = c; cc < cols; ++cc) a[rr][cc] -= factor * a[r][cc];
      rhs[rr] -= factor * rhs[r];
    }
    pivot_cols.push_back(c);
    ++r;
  }

  for (std::size_t rr = r; rr < rows; ++rr) {
    if (rhs[rr] != 0) return std::nullopt;
  }

  std::vector<BigRational> solution(cols, BigRational(0));
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) solution[pivot_cols[i]] = rhs[i];
  return solution;
}

namespace {

BigRational power(std::uint64_t base, unsigned exp) {
  return BigRational(boost::multiprecision::pow(BigInt(base), exp));
}

// (x+y)! / ((x+p)! (y+q)!), or nullopt when a factorial argument is negative.
std::optional<BigRational> prefactor(std::uint64_t x, std::uint64_t y, int p, int q) {
  const auto xp = static_cast<std::int64_t>(x) + p;
  const auto yq = static_cast<std::int64_t>(y) + q;
  if (xp < 0 || yq < 0) return std::nullopt;
  BigRational value = factorial(x + y);
  value /= factorial(static_cast<std::uint64_t>(xp));
  value /= factorial(static_cast<std::uint64_t>(yq));
  return value;
}

BigRational evaluate_polynomial(const std::vector<Monomial>& terms, std::uint64_t x,
                                std::uint64_t y) {
  BigRational sum = 0;
  for (const auto& t : terms) sum += t.coefficient * power(x, t.x_exp) * power(y, t.y_exp);
  return sum;
}

std::string factorial_text(const char* var, int offset) {
  if (offset == 0) return std::string(var) + "!";
  return "(" + std::string(var) + (offset > 0 ? "+" : "-") + std::to_string(std::abs(offset)) +
         ")!";
}

std::tuple<std::uint64_t, std::uint64_t, std::uint64_t, std::uint64_t> holdout_key(
    const GridPoint& g) {
  return {std::max(g.x, g.y), g.x + g.y, g.x, g.y};
}

}  // namespace

std::string FittedForm::polynomial_string() const {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& t : terms) {
    std::string vars;
    const auto add = [&](char v, unsigned e) {
      if (e == 0) return;
      if (!vars.empty()) vars += '*';
      vars += v;
      if (e > 1) vars += "^" + std::to_string(e);
    };
    add('x', t.x_exp);
    add('y', t.y_exp);

    const bool negative = t.coefficient < 0;
    const BigRational mag = negative ? BigRational(-t.coefficient) : t.coefficient;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (vars.empty()) {
      out += mag.str();
    } else {
      if (mag != 1) out += mag.str() + "*";
      out += vars;
    }
  }
  return out;
}

std::string FittedForm::to_string() const {
  const std::string den_x = factorial_text("x", p);
  const std::string den_y = factorial_text("y", q);
  return "S(" + tmpl.shape() + ") = (x+y)!/(" + den_x + "*" + den_y + ") * (" +
         polynomial_string() + ")";
}

FitResult fit_samples(const Template& t, std::span<const Sample> samples,
                      const FitOptions& options) {
  const auto basis_size = monomial_basis(options.max_degree).size();
  if (samples.size() < basis_size + options.holdout) {
    throw precondition_error("grid has " + std::to_string(samples.size()) +
                             " points; degree " + std::to_string(options.max_degree) +
                             " with holdout " + std::to_string(options.holdout) + " needs " +
                             std::to_string(basis_size + options.holdout));
  }
  if (options.offset_min > options.offset_max) {
    throw precondition_error("empty offset range");
  }
  for (const auto& s : samples) {
    if (!t.admits(s.point.x, s.point.y)) {
      throw precondition_error("sample (" + std::to_string(s.point.x) + "," +
                               std::to_string(s.point.y) + ") violates " + t.constraint());
    }
  }

  std::vector<Sample> ordered(samples.begin(), samples.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const Sample& l, const Sample& r) {
    return holdout_key(l.point) < holdout_key(r.point);
  });
  const std::size_t training = ordered.size() - options.holdout;

  FitResult result;
  result.training_points = training;
  result.holdout_points = options.holdout;

  for (unsigned degree = 0; degree <= options.max_degree; ++degree) {
    const auto basis = monomial_basis(degree);
    for (int p = options.offset_min; p <= options.offset_max; ++p) {
      for (int q = options.offset_min; q <= options.offset_max; ++q) {
        ++result.hypotheses_tried;

        // Target for P(x, y) at each sample: S / prefactor.
        std::vector<BigRational> targets;
        targets.reserve(ordered.size());
        bool defined = true;
        for (const auto& s : ordered) {
          auto pre = prefactor(s.point.x, s.point.y, p, q);
          if (!pre) {
            defined = false;
            break;
          }
          targets.push_back(BigRational(s.value) / *pre);
        }
        if (!defined) continue;

        std::vector<std::vector<BigRational>> matrix;
        std::vector<BigRational> rhs;
        for (std::size_t i = 0; i < training; ++i) {
          std::vector<BigRational> row;
          row.reserve(basis.size());
          for (auto [ex, ey] : basis) {
            row.push_back(power(ordered[i].point.x, ex) * power(ordered[i].point.y, ey));
          }
          matrix.push_back(std::move(row));
          rhs.push_back(targets[i]);
        }
        auto coefficients = solve_exact(std::move(matrix), std::move(rhs));
        if (!coefficients) continue;

        FittedForm form{t, p, q, degree, {}};
        for (std::size_t m = basis.size(); m-- > 0;) {
          if ((*coefficients)[m] != 0) {
            form.terms.push_back({basis[m].first, basis[m].second, (*coefficients)[m]});
          }
        }

        bool validated = true;
        for (std::size_t i = 0; i < ordered.size() && validated; ++i) {
          validated = evaluate_polynomial(form.terms, ordered[i].point.x, ordered[i].point.y) ==
                      targets[i];
        }
        if (validated) {
          result.form = std::move(form);
          return result;
        }
      }
    }
  }
  return result;
}

FitResult fit_template(const Template& t, std::span<const GridPoint> grid,
                       const FitOptions& options, PlayCache& cache) {
  std::vector<Sample> samples;
  samples.reserve(grid.size());
  for (const auto& g : grid) samples.push_back({g, count_plays(t.instantiate(g.x, g.y), cache)});
  return fit_samples(t, samples, options);
}

PlayCount evaluate_fitted(const FittedForm& f, std::uint64_t x, std::uint64_t y) {
  if (!f.tmpl.admits(x, y)) {
    throw precondition_error("(" + std::to_string(x) + "," + std::to_string(y) +
                             ") violates template constraint " + f.tmpl.constraint());
  }
  auto pre = prefactor(x, y, f.p, f.q);
  if (!pre) throw precondition_error("factorial of a negative argument");
  const BigRational value = *pre * evaluate_polynomial(f.terms, x, y);
  if (denominator(value) != 1 || value < 0) {
    throw integrality_error("fitted form gives non-natural value " + value.str() + " at (" +
                            std::to_string(x) + "," + std::to_string(y) + ")");
  }
  return numerator(value);
}

}  // namespace stanley
