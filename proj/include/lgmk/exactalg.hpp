#pragma once

// Exact arithmetic kernel: GMP rationals, Laurent monomials in (t, x, z) and
// truncated graded series over them.
//
// A series is graded by the anticanonical degree of its curve exponent; every
// stored term has degree <= truncation. Chart exponents and the z exponent are
// unrestricted integers.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lgmk {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p/q", "p" or an integer literal into a canonical rational.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& value);
Rational factorial(int n);

struct Monomial {
  std::vector<int> curve;  // over the NE(X) generator basis, entries >= 0
  std::vector<int> chart;  // Laurent exponents of chart variables
  int z = 0;

  Monomial() = default;
  Monomial(std::vector<int> curve_exp, std::vector<int> chart_exp, int z_exp = 0)
      : curve(std::move(curve_exp)), chart(std::move(chart_exp)), z(z_exp) {}

  static Monomial unit(std::size_t curve_vars, std::size_t chart_vars) {
    return Monomial(std::vector<int>(curve_vars, 0), std::vector<int>(chart_vars, 0), 0);
  }

  bool is_unit() const;
  bool chart_is_zero() const;
  Monomial operator*(const Monomial& other) const;
  Monomial pow(int n) const;

  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;
};

struct Variable {
  enum class Kind { curve, chart, z };
  Kind kind = Kind::curve;
  int index = 0;

  static Variable curve_var(int i) { return {Kind::curve, i}; }
  static Variable chart_var(int i) { return {Kind::chart, i}; }
  static Variable z_var() { return {Kind::z, 0}; }
};

/// Variable arity plus the anticanonical degree assignment used for truncation.
class Grading {
 public:
  Grading() = default;
  Grading(std::vector<int> curve_degrees, int chart_vars, int truncation);

  std::size_t curve_vars() const { return curve_degrees_.size(); }
  std::size_t chart_vars() const { return static_cast<std::size_t>(chart_vars_); }
  int truncation() const { return truncation_; }
  const std::vector<int>& curve_degrees() const { return curve_degrees_; }

  int degree(const std::vector<int>& curve) const;
  int degree(const Monomial& m) const { return degree(m.curve); }

  Grading with_truncation(int truncation) const;
  Grading with_chart_vars(int chart_vars) const;

  bool operator==(const Grading&) const = default;

 private:
  std::vector<int> curve_degrees_;
  int chart_vars_ = 0;
  int truncation_ = 0;
};

class GradedSeries {
 public:
  using TermMap = std::map<Monomial, Rational>;

  GradedSeries() = default;
  explicit GradedSeries(Grading grading) : grading_(std::move(grading)) {}

  static GradedSeries constant(const Grading& g, const Rational& c);
  static GradedSeries one(const Grading& g) { return constant(g, Rational(1)); }
  static GradedSeries term(const Grading& g, const Monomial& m, const Rational& c = 1);
  static GradedSeries variable(const Grading& g, Variable v);

  const Grading& grading() const { return grading_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Monomial unit_monomial() const;
  Rational coefficient(const Monomial& m) const;
  Rational constant_coefficient() const { return coefficient(unit_monomial()); }

  /// Adds c·m; terms above the truncation are discarded, zeros are erased.
  void add_term(const Monomial& m, const Rational& c);

  /// Lowest and highest anticanonical degree carried (0/0 for the zero series).
  int min_degree() const;
  int max_degree() const;

  GradedSeries truncated(int truncation) const;

  GradedSeries& operator+=(const GradedSeries& other);
  GradedSeries& operator-=(const GradedSeries& other);
  GradedSeries& operator*=(const GradedSeries& other);
  GradedSeries& operator*=(const Rational& c);

  friend GradedSeries operator+(GradedSeries a, const GradedSeries& b) { return a += b; }
  friend GradedSeries operator-(GradedSeries a, const GradedSeries& b) { return a -= b; }
  friend GradedSeries operator*(const GradedSeries& a, const GradedSeries& b);
  friend GradedSeries operator*(GradedSeries a, const Rational& c) { return a *= c; }
  friend GradedSeries operator*(const Rational& c, GradedSeries a) { return a *= c; }
  GradedSeries operator-() const;

  bool operator==(const GradedSeries& other) const;

  /// Human-readable rendering, e.g. "x1 + x2 + t^3/(x1*x2)". Curve variables
  /// print as t^deg by default; with degree_powers = false each NE generator
  /// keeps its own exponent ("x1 + x2 + t/(x1*x2)").
  std::string to_string(const std::vector<std::string>& curve_names = {},
                        const std::vector<std::string>& chart_names = {}, bool degree_powers = true) const;

 private:
  void check_compatible(const GradedSeries& other, const char* op) const;

  Grading grading_;
  TermMap terms_;
};

GradedSeries pow(const GradedSeries& f, int n);

/// Sub-series of terms whose chart exponent is zero.
GradedSeries constant_term(const GradedSeries& f);

/// exp(f). When every term of f has positive anticanonical degree the result is
/// exact modulo truncation; otherwise f must have zero constant term and an
/// explicit order must be given (the exponential is cut after f^order/order!).
GradedSeries series_exp(const GradedSeries& f, std::optional<int> max_order = std::nullopt);

/// log(f) for f with constant term 1, same order rules as series_exp applied to f-1.
GradedSeries series_log(const GradedSeries& f, std::optional<int> max_order = std::nullopt);

/// Replaces var by g in f. var must occur with non-negative exponents only.
GradedSeries substitute(const GradedSeries& f, Variable var, const GradedSeries& g);

/// Compositional inverse of f = var·(1 + ...) in the single variable var.
/// For a curve variable the order follows from the truncation; chart and z
/// variables need an explicit order.
GradedSeries revert(const GradedSeries& f, Variable var, std::optional<int> max_order = std::nullopt);

}  // namespace lgmk
