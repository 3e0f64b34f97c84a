#include <doctest.h>

#include <random>

#include "stanley/counting.hpp"
#include "stanley/errors.hpp"
#include "stanley/formulas.hpp"
#include "stanley/guess.hpp"

using namespace stanley;

namespace {

const Template two_piles{0, Order::greater_equal};

FittedForm two_pile_form() {
  return FittedForm{two_piles, 1, 0, 1, {{1, 0, 1}, {0, 1, -1}, {0, 0, 1}}};
}

}  // namespace

TEST_CASE("Template instantiation") {
  CHECK(Template{2, Order::greater}.instantiate(3, 1) == Position::normalize({3, 0, 0, 1}));
  const Template strict{0, Order::greater};
  CHECK_THROWS_AS(strict.instantiate(2, 2), precondition_error);
  CHECK(Template{1, Order::less}.shape() == "[x,0,y]");
  CHECK(template_grid(Template{0, Order::greater}, 3) == std::vector<GridPoint>{{2, 1}, {3, 1}, {3, 2}});
  CHECK(parse_order("gt") == Order::greater);
  CHECK_THROWS_AS(parse_order("sideways"), parse_error);
}

TEST_CASE("exact solver recovers random polynomials") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> coef(-6, 6);
  std::uniform_int_distribution<int> den(1, 4);
  for (int trial = 0; trial < 30; ++trial) {
    const unsigned degree = static_cast<unsigned>(trial % 4);
    const auto basis = monomial_basis(degree);
    std::vector<BigRational> truth;
    for (std::size_t i = 0; i < basis.size(); ++i) truth.emplace_back(coef(rng), den(rng));

    std::vector<std::vector<BigRational>> a;
    std::vector<BigRational> b;
    for (int x = 1; x <= 6; ++x) {
      for (int y = 1; y <= 6; ++y) {
        std::vector<BigRational> row;
        BigRational value = 0;
        for (std::size_t m = 0; m < basis.size(); ++m) {
          BigRational term = boost::multiprecision::pow(BigInt(x), basis[m].first) *
                             boost::multiprecision::pow(BigInt(y), basis[m].second);
          row.push_back(term);
          value += truth[m] * term;
        }
        a.push_back(row);
        b.push_back(value);
      }
    }
    const auto solved = solve_exact(a, b);
    REQUIRE(solved.has_value());
    CHECK(*solved == truth);

    b[3] += 1;
    CHECK_FALSE(solve_exact(a, b).has_value());
  }
}

TEST_CASE("solver on singular and empty systems") {
  // x + y = 2 twice: rank 1, free variable set to zero.
  const auto s = solve_exact({{1, 1}, {2, 2}}, {2, 4});
  REQUIRE(s.has_value());
  CHECK((*s)[0] == 2);
  CHECK((*s)[1] == 0);
  CHECK_FALSE(solve_exact({{0, 0}}, {1}).has_value());
}

TEST_CASE("fitter rediscovers the two-pile formula from DP data") {
  PlayCache cache;
  const auto grid = template_grid(two_piles, 10);
  FitOptions options;
  options.max_degree = 3;
  const auto result = fit_template(two_piles, grid, options, cache);
  REQUIRE(result.form.has_value());
  const auto& f = *result.form;
  CHECK(f.p == 1);
  CHECK(f.q == 0);
  CHECK(f.degree == 1);
  CHECK(f.polynomial_string() == "x - y + 1");
  CHECK(f.to_string() == "S([x,y]) = (x+y)!/((x+1)!*y!) * (x - y + 1)");
  CHECK(result.holdout_points == 10);
  for (const auto& g : grid) CHECK(evaluate_fitted(f, g.x, g.y) == count_plays(Position::normalize({g.x, g.y}), cache));
}

TEST_CASE("degree 0 cannot fit the two-pile data") {
  PlayCache cache;
  FitOptions options;
  options.max_degree = 0;
  const auto result = fit_template(two_piles, template_grid(two_piles, 10), options, cache);
  CHECK_FALSE(result.form.has_value());
  CHECK(result.hypotheses_tried == 25);
}

TEST_CASE("fit precondition: enough points") {
  PlayCache cache;
  FitOptions options;
  options.max_degree = 4;
  options.holdout = 10;
  // 15 monomials + 10 holdout > 10 points.
  CHECK_THROWS_AS(fit_template(two_piles, template_grid(two_piles, 4), options, cache),
                  precondition_error);
}

TEST_CASE("fitting is deterministic") {
  PlayCache cache;
  FitOptions options;
  options.max_degree = 2;
  const auto grid = template_grid(two_piles, 9);
  const auto a = fit_template(two_piles, grid, options, cache);
  const auto b = fit_template(two_piles, grid, options, cache);
  REQUIRE(a.form.has_value());
  REQUIRE(b.form.has_value());
  CHECK(a.form->to_string() == b.form->to_string());
  CHECK(a.hypotheses_tried == b.hypotheses_tried);
}

TEST_CASE("fitter recovers a planted form from synthetic data") {
  // S = (x+y)!/(x!*(y-1)!) * (x^2 + 3y), planted directly.
  const Template t{3, Order::less};
  std::vector<Sample> samples;
  for (const auto& g : template_grid(t, 9)) {
    BigRational v = factorial(g.x + g.y);
    v /= factorial(g.x);
    v /= factorial(g.y - 1);
    v *= BigInt(g.x * g.x + 3 * g.y);
    REQUIRE(denominator(v) == 1);
    samples.push_back({g, numerator(v)});
  }
  FitOptions options;
  options.max_degree = 3;
  const auto result = fit_samples(t, samples, options);
  REQUIRE(result.form.has_value());
  CHECK(result.form->p == 0);
  CHECK(result.form->q == -1);
  CHECK(result.form->to_string() == "S([x,0,0,0,y]) = (x+y)!/(x!*(y-1)!) * (x^2 + 3*y)");
  CHECK(result.form->polynomial_string() == "x^2 + 3*y");
}

TEST_CASE("fit for the one-gap template validates on held-out points") {
  PlayCache cache;
  const Template t{1, Order::greater};
  FitOptions options;
  options.max_degree = 6;
  options.holdout = 10;
  const auto grid = template_grid(t, 14);
  const auto result = fit_template(t, grid, options, cache);
  REQUIRE(result.form.has_value());
  CHECK(result.holdout_points >= 10);
  for (const auto& g : grid) {
    CHECK(evaluate_fitted(*result.form, g.x, g.y) == count_plays(t.instantiate(g.x, g.y), cache));
  }
  MESSAGE(result.form->to_string());
}

TEST_CASE("evaluate_fitted") {
  const auto f = two_pile_form();
  CHECK(evaluate_fitted(f, 2, 1) == 2);
  CHECK(evaluate_fitted(f, 5, 5) == 42);
  CHECK(evaluate_fitted(f, 1, 1) == 1);
  CHECK_THROWS_AS(evaluate_fitted(f, 1, 2), precondition_error);

  FittedForm bad = f;
  bad.terms = {{0, 0, BigRational(1, 7)}};
  CHECK_THROWS_AS(evaluate_fitted(bad, 2, 1), integrality_error);
}
