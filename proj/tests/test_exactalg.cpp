#include <doctest.h>

#include <random>

#include "lgmk/error.hpp"
#include "lgmk/exactalg.hpp"
#include "lgmk/linalg.hpp"

using namespace lgmk;

namespace {

// One chart variable x, one curve variable t of degree 1.
Grading g1(int n) { return Grading({1}, 1, n); }
GradedSeries x(const Grading& g) { return GradedSeries::variable(g, Variable::chart_var(0)); }
GradedSeries t(const Grading& g) { return GradedSeries::variable(g, Variable::curve_var(0)); }
GradedSeries inv_x(const Grading& g) { return GradedSeries::term(g, Monomial({0}, {-1})); }

// Binomial coefficient by Pascal's triangle, independent of the series code.
Rational binom(int n, int k) {
  std::vector<std::vector<Rational>> c(n + 1, std::vector<Rational>(n + 1, 0));
  for (int i = 0; i <= n; ++i) {
    c[i][0] = 1;
    for (int j = 1; j <= i; ++j) c[i][j] = c[i - 1][j - 1] + (j <= i - 1 ? c[i - 1][j] : Rational(0));
  }
  return c[n][k];
}

}  // namespace

TEST_CASE("rationals parse and print canonically") {
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(to_string(parse_rational("-2/4")) == "-1/2");
  CHECK(factorial(10) == 3628800);
  CHECK_THROWS_AS(parse_rational("1/0"), StructuralError);
  CHECK_THROWS_AS(parse_rational("abc"), StructuralError);
}

TEST_CASE("monomials multiply by exponent addition") {
  const Monomial a({0}, {1, -1}), b({0}, {0, 1});
  CHECK(a * b == Monomial({0}, {1, 0}));
  CHECK(Monomial({2}, {1}, -1).pow(3) == Monomial({6}, {3}, -3));
}

TEST_CASE("difference of squares is truncated") {
  const Grading g({1}, 0, 2);
  const GradedSeries tt = GradedSeries::variable(g, Variable::curve_var(0));
  const GradedSeries one = GradedSeries::one(g);
  const GradedSeries p = (one + tt) * (one - tt);
  CHECK(p == one - tt * tt);
  const Grading g1n = g.with_truncation(1);
  const GradedSeries t1 = GradedSeries::variable(g1n, Variable::curve_var(0));
  CHECK((t1 * t1).is_zero());
}

TEST_CASE("constant terms match binomial oracles") {
  const Grading g = g1(8);
  CHECK(constant_term(pow(x(g) + inv_x(g), 4)).constant_coefficient() == 6);
  for (int n = 0; n <= 8; n += 2) CHECK(constant_term(pow(x(g) + inv_x(g), n)).constant_coefficient() == binom(n, n / 2));
  CHECK(constant_term(x(g) + t(g) * inv_x(g) + GradedSeries::constant(g, 3)) == GradedSeries::constant(g, 3));

  // (x1 + x2 + t^3/(x1 x2))^3 -> 6 t^3, t of degree 3 per generator
  const Grading g2({3}, 2, 3);
  const GradedSeries w = GradedSeries::variable(g2, Variable::chart_var(0)) +
                         GradedSeries::variable(g2, Variable::chart_var(1)) +
                         GradedSeries::term(g2, Monomial({1}, {-1, -1}));
  CHECK(constant_term(pow(w, 3)) == GradedSeries::term(g2, Monomial({1}, {0, 0}), 6));

  // (x + t^2/x)^4 -> 6 t^4 with deg t = 2
  const Grading g3({2}, 1, 4);
  const GradedSeries w3 = GradedSeries::variable(g3, Variable::chart_var(0)) + GradedSeries::term(g3, Monomial({1}, {-1}));
  CHECK(constant_term(pow(w3, 4)) == GradedSeries::term(g3, Monomial({2}, {0}), 6));
}

TEST_CASE("exp and log") {
  const Grading g({1}, 0, 6);
  const GradedSeries tt = GradedSeries::variable(g, Variable::curve_var(0));
  CHECK(series_exp(GradedSeries(g)) == GradedSeries::one(g));
  const Rational a(5, 3);
  const GradedSeries e = series_exp(tt * a);
  for (int k = 0; k <= 6; ++k) {
    Rational expect = 1;
    for (int j = 1; j <= k; ++j) expect *= a / j;
    CHECK(e.coefficient(Monomial({k}, {})) == expect);
  }
  const GradedSeries f = tt * Rational(2) + tt * tt;
  CHECK(series_log(series_exp(f)) == f);
  CHECK_THROWS_AS(series_exp(GradedSeries::one(g)), DomainError);
  CHECK_THROWS_AS(series_log(tt), DomainError);

  // degree-0 arguments need an explicit order
  const Grading gx = g1(3);
  CHECK_THROWS_AS(series_exp(x(gx)), DomainError);
  const GradedSeries ex = series_exp(x(gx), 2);
  CHECK(ex.coefficient(Monomial({0}, {2})) == Rational(1, 2));
  CHECK(ex.coefficient(Monomial({0}, {3})) == 0);
}

TEST_CASE("reversion matches Lagrange inversion") {
  const Grading g({1}, 0, 8);
  const GradedSeries u = GradedSeries::variable(g, Variable::curve_var(0));
  CHECK(revert(u, Variable::curve_var(0)) == u);

  const GradedSeries f = u * series_exp(u);
  const GradedSeries w = revert(f, Variable::curve_var(0));
  // (-n)^{n-1} / n!
  for (int n = 1; n <= 8; ++n) {
    Rational c = 1;
    for (int k = 1; k < n; ++k) c *= -n;
    CHECK(w.coefficient(Monomial({n}, {})) == c / factorial(n));
  }
  CHECK(w.coefficient(Monomial({4}, {})) == Rational(-8, 3));

  // u/(1-u) reverts to u/(1+u)
  GradedSeries geo(g), alt(g);
  for (int n = 1; n <= 8; ++n) {
    geo.add_term(Monomial({n}, {}), 1);
    alt.add_term(Monomial({n}, {}), n % 2 ? 1 : -1);
  }
  CHECK(revert(geo, Variable::curve_var(0)) == alt);
  CHECK(substitute(geo, Variable::curve_var(0), alt) == u);
  CHECK_THROWS_AS(revert(u * Rational(2), Variable::curve_var(0)), DomainError);
}

TEST_CASE("arithmetic is commutative and associative on random series") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-3, 3), ex(-2, 2), cv(0, 2);
  const Grading g({1, 2}, 2, 6);
  auto random_series = [&] {
    GradedSeries s(g);
    for (int k = 0; k < 6; ++k) s.add_term(Monomial({cv(rng), cv(rng)}, {ex(rng), ex(rng)}, ex(rng)), coef(rng));
    return s;
  };
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_series(), b = random_series(), c = random_series();
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("mismatched gradings are rejected") {
  const GradedSeries a = GradedSeries::one(Grading({1}, 0, 3));
  const GradedSeries b = GradedSeries::one(Grading({1}, 0, 4));
  CHECK_THROWS_AS(a + b, StructuralError);
  CHECK_THROWS_AS(a * b, StructuralError);
}

TEST_CASE("rendering") {
  const Grading g({3}, 2, 3);
  const GradedSeries w = GradedSeries::variable(g, Variable::chart_var(0)) +
                         GradedSeries::variable(g, Variable::chart_var(1)) +
                         GradedSeries::term(g, Monomial({1}, {-1, -1}));
  CHECK(w.to_string() == "x1 + x2 + t^3/(x1*x2)");
  CHECK(w.to_string({}, {}, false) == "x1 + x2 + t/(x1*x2)");
  CHECK(GradedSeries(g).to_string() == "0");
}

TEST_CASE("exact linear algebra") {
  const auto m = RationalMatrix::from_int_rows({{1, 1, 1}, {0, 1, 2}});
  CHECK(rank(m) == 2);
  const auto ns = nullspace(m);
  REQUIRE(ns.size() == 1);
  CHECK(primitive_integer(ns[0]) == std::vector<Integer>{1, -2, 1});
  CHECK(determinant(RationalMatrix::from_int_rows({{2, 1}, {1, 1}})) == 1);
}
