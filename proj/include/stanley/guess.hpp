#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "stanley/bigint.hpp"
#include "stanley/counting.hpp"
#include "stanley/position.hpp"

namespace stanley {

/// Ordering constraint between the two free piles of a template.
enum class Order { greater, less, greater_equal };

/// The two-parameter family [x, 0^gap, y] restricted by `order` (x > y, x < y, x >= y),
/// with x, y >= 1.
struct Template {
  std::size_t gap = 0;
  Order order = Order::greater_equal;

  bool admits(std::uint64_t x, std::uint64_t y) const noexcept;
  Position instantiate(std::uint64_t x, std::uint64_t y) const;
  /// "[x,y]", "[x,0,y]", "[x,0,0,y]", ...
  std::string shape() const;
  /// "x >= y >= 1" and friends.
  std::string constraint() const;
};

Order parse_order(std::string_view text);

struct GridPoint {
  std::uint64_t x = 0;
  std::uint64_t y = 0;

  friend bool operator==(const GridPoint&, const GridPoint&) = default;
};

/// Every (x, y) in [1, max]^2 admitted by the template, ordered by (x, y).
std::vector<GridPoint> template_grid(const Template& t, std::uint64_t max);

struct Sample {
  GridPoint point;
  PlayCount value;
};

/// One term coefficient * x^x_exp * y^y_exp.
struct Monomial {
  unsigned x_exp = 0;
  unsigned y_exp = 0;
  BigRational coefficient;
};

/// Hypothesis S(x, y) = (x+y)! / ((x+p)! (y+q)!) * P(x, y) with P exact-rational.
struct FittedForm {
  Template tmpl;
  int p = 0;
  int q = 0;
  unsigned degree = 0;
  /// Nonzero terms, highest total degree first, then by descending x exponent.
  std::vector<Monomial> terms;

  /// e.g. "S([x,y]) = (x+y)!/((x+1)!*y!) * (x - y + 1)"
  std::string to_string() const;
  std::string polynomial_string() const;
};

struct FitOptions {
  int offset_min = -2;
  int offset_max = 2;
  unsigned max_degree = 4;
  /// Points with the largest coordinates are held out for validation.
  std::size_t holdout = 10;
};

struct FitResult {
  std::optional<FittedForm> form;
  std::size_t training_points = 0;
  std::size_t holdout_points = 0;
  std::size_t hypotheses_tried = 0;
};

/// Search degrees ascending, then (p, q) lexicographically; the first hypothesis
/// whose exact least-degree solution on the training points also reproduces every
/// held-out point wins. Throws precondition_error when the grid has fewer than
/// (d+1)(d+2)/2 + holdout points.
FitResult fit_samples(const Template& t, std::span<const Sample> samples,
                      const FitOptions& options);

/// Samples the template on `grid` with count_plays and fits.
FitResult fit_template(const Template& t, std::span<const GridPoint> grid,
                       const FitOptions& options, PlayCache& cache);

/// Exact evaluation. Throws precondition_error if (x, y) is outside the
/// template, integrality_error if the value is not a natural number.
PlayCount evaluate_fitted(const FittedForm& f, std::uint64_t x, std::uint64_t y);

/// Solves A v = rhs over the rationals by Gaussian elimination. Returns nullopt
/// when the system is inconsistent; free variables are set to zero.
std::optional<std::vector<BigRational>> solve_exact(std::vector<std::vector<BigRational>> a,
                                                    std::vector<BigRational> rhs);

/// Monomial exponents of total degree <= d, in the order used by the fitter.
std::vector<std::pair<unsigned, unsigned>> monomial_basis(unsigned degree);

}  // namespace stanley
