#include "lgmk/exactalg.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "lgmk/error.hpp"

namespace lgmk {

const char* to_string(GeometryErrorCode code) {
  switch (code) {
    case GeometryErrorCode::malformed: return "malformed geometry";
    case GeometryErrorCode::not_anticanonical: return "not anticanonical";
    case GeometryErrorCode::non_simplicial_cone: return "non-simplicial cone";
    case GeometryErrorCode::singular_cone: return "singular cone";
    case GeometryErrorCode::not_fano: return "not Fano";
    case GeometryErrorCode::singular_pairing: return "singular pairing";
    case GeometryErrorCode::not_pure_dimensional: return "ray not in any maximal cone";
    case GeometryErrorCode::fan_relation_violated: return "fan relation violated";
    case GeometryErrorCode::non_associative: return "cup product not associative";
    case GeometryErrorCode::unknown_preset: return "unknown preset";
  }
  return "geometry error";
}

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != ' ') s.push_back(c);
  if (s.empty()) throw StructuralError("empty rational literal");
  if (s.front() == '+') s.erase(s.begin());
  Rational r;
  try {
    if (r.set_str(s, 10) != 0) throw StructuralError("bad rational literal '" + text + "'");
  } catch (const std::invalid_argument&) {
    throw StructuralError("bad rational literal '" + text + "'");
  }
  if (r.get_den() == 0) throw StructuralError("zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(); }

Rational factorial(int n) {
  if (n < 0) throw DomainError("factorial of a negative integer");
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(f);
}

// ---------------------------------------------------------------- Monomial

bool Monomial::is_unit() const {
  return z == 0 && std::all_of(curve.begin(), curve.end(), [](int e) { return e == 0; }) &&
         chart_is_zero();
}

bool Monomial::chart_is_zero() const {
  return std::all_of(chart.begin(), chart.end(), [](int e) { return e == 0; });
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (curve.size() != other.curve.size() || chart.size() != other.chart.size())
    throw StructuralError("monomial arity mismatch");
  Monomial r = *this;
  for (std::size_t i = 0; i < curve.size(); ++i) r.curve[i] += other.curve[i];
  for (std::size_t i = 0; i < chart.size(); ++i) r.chart[i] += other.chart[i];
  r.z += other.z;
  return r;
}

Monomial Monomial::pow(int n) const {
  if (n < 0 && std::any_of(curve.begin(), curve.end(), [](int e) { return e != 0; }))
    throw DomainError("negative power of a curve monomial");
  Monomial r = *this;
  for (auto& e : r.curve) e *= n;
  for (auto& e : r.chart) e *= n;
  r.z *= n;
  return r;
}

// ---------------------------------------------------------------- Grading

Grading::Grading(std::vector<int> curve_degrees, int chart_vars, int truncation)
    : curve_degrees_(std::move(curve_degrees)), chart_vars_(chart_vars), truncation_(truncation) {
  if (truncation < 0) throw StructuralError("truncation must be non-negative");
  if (chart_vars < 0) throw StructuralError("negative chart arity");
  for (int d : curve_degrees_)
    if (d <= 0) throw StructuralError("curve variables need positive anticanonical degree");
}

int Grading::degree(const std::vector<int>& curve) const {
  if (curve.size() != curve_degrees_.size()) throw StructuralError("curve arity mismatch");
  int d = 0;
  for (std::size_t i = 0; i < curve.size(); ++i) d += curve[i] * curve_degrees_[i];
  return d;
}

Grading Grading::with_truncation(int truncation) const {
  return Grading(curve_degrees_, chart_vars_, truncation);
}

Grading Grading::with_chart_vars(int chart_vars) const {
  return Grading(curve_degrees_, chart_vars, truncation_);
}

// ---------------------------------------------------------------- GradedSeries

GradedSeries GradedSeries::constant(const Grading& g, const Rational& c) {
  GradedSeries s(g);
  s.add_term(s.unit_monomial(), c);
  return s;
}

GradedSeries GradedSeries::term(const Grading& g, const Monomial& m, const Rational& c) {
  if (m.curve.size() != g.curve_vars() || m.chart.size() != g.chart_vars())
    throw StructuralError("monomial does not match the series arity");
  for (int e : m.curve)
    if (e < 0) throw DomainError("curve exponents must be non-negative");
  GradedSeries s(g);
  s.add_term(m, c);
  return s;
}

GradedSeries GradedSeries::variable(const Grading& g, Variable v) {
  Monomial m = Monomial::unit(g.curve_vars(), g.chart_vars());
  switch (v.kind) {
    case Variable::Kind::curve:
      if (v.index < 0 || static_cast<std::size_t>(v.index) >= g.curve_vars())
        throw StructuralError("curve variable index out of range");
      m.curve[v.index] = 1;
      break;
    case Variable::Kind::chart:
      if (v.index < 0 || static_cast<std::size_t>(v.index) >= g.chart_vars())
        throw StructuralError("chart variable index out of range");
      m.chart[v.index] = 1;
      break;
    case Variable::Kind::z:
      m.z = 1;
      break;
  }
  return term(g, m);
}

Monomial GradedSeries::unit_monomial() const {
  return Monomial::unit(grading_.curve_vars(), grading_.chart_vars());
}

Rational GradedSeries::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void GradedSeries::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  if (grading_.degree(m) > grading_.truncation()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int GradedSeries::min_degree() const {
  if (terms_.empty()) return 0;
  int d = grading_.truncation();
  for (const auto& [m, c] : terms_) d = std::min(d, grading_.degree(m));
  return d;
}

int GradedSeries::max_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, grading_.degree(m));
  return d;
}

GradedSeries GradedSeries::truncated(int truncation) const {
  GradedSeries r(grading_.with_truncation(truncation));
  for (const auto& [m, c] : terms_) r.add_term(m, c);
  return r;
}

void GradedSeries::check_compatible(const GradedSeries& other, const char* op) const {
  if (!(grading_ == other.grading_))
    throw StructuralError(std::string("series ") + op + ": arity, truncation or grading mismatch");
}

GradedSeries& GradedSeries::operator+=(const GradedSeries& other) {
  check_compatible(other, "add");
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

GradedSeries& GradedSeries::operator-=(const GradedSeries& other) {
  check_compatible(other, "subtract");
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

GradedSeries operator*(const GradedSeries& a, const GradedSeries& b) {
  a.check_compatible(b, "multiply");
  GradedSeries r(a.grading_);
  const int n = a.grading_.truncation();
  // Bucket b by degree so each pair is tested once against the truncation.
  std::vector<std::pair<int, const std::pair<const Monomial, Rational>*>> bs;
  bs.reserve(b.terms_.size());
  for (const auto& t : b.terms_) bs.emplace_back(b.grading_.degree(t.first), &t);
  std::sort(bs.begin(), bs.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  Rational prod;
  for (const auto& [ma, ca] : a.terms_) {
    const int da = a.grading_.degree(ma);
    for (const auto& [db, tb] : bs) {
      if (da + db > n) break;
      prod = ca * tb->second;
      r.add_term(ma * tb->first, prod);
    }
  }
  return r;
}

GradedSeries& GradedSeries::operator*=(const GradedSeries& other) {
  *this = *this * other;
  return *this;
}

GradedSeries& GradedSeries::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

GradedSeries GradedSeries::operator-() const {
  GradedSeries r = *this;
  for (auto& [m, v] : r.terms_) v = -v;
  return r;
}

bool GradedSeries::operator==(const GradedSeries& other) const {
  return grading_ == other.grading_ && terms_ == other.terms_;
}

namespace {

void append_power(std::ostringstream& os, bool& first, const std::string& name, int e) {
  if (e == 0) return;
  if (!first) os << '*';
  first = false;
  os << name;
  if (e != 1) os << '^' << e;
}

std::string default_name(const char* stem, std::size_t i, std::size_t count) {
  if (count == 1) return stem;
  return std::string(stem) + std::to_string(i + 1);
}

}  // namespace

std::string GradedSeries::to_string(const std::vector<std::string>& curve_names,
                                    const std::vector<std::string>& chart_names, bool degree_powers) const {
  if (terms_.empty()) return "0";
  // Increasing degree; within a degree, decreasing monomial order (x1 before x2).
  std::vector<const std::pair<const Monomial, Rational>*> order;
  for (const auto& t : terms_) order.push_back(&t);
  std::stable_sort(order.begin(), order.end(), [&](auto* x, auto* y) {
    const int dx = grading_.degree(x->first), dy = grading_.degree(y->first);
    return dx != dy ? dx < dy : y->first < x->first;
  });
  std::ostringstream os;
  bool first_term = true;
  for (const auto* t : order) {
    const Monomial& m = t->first;
    Rational c = t->second;
    if (first_term) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first_term = false;
    c = abs(c);

    std::ostringstream num, den;
    bool num_first = true, den_first = true;
    for (std::size_t i = 0; i < m.curve.size(); ++i) {
      std::string name = i < curve_names.size() ? curve_names[i]
                                                : default_name("t", i, m.curve.size());
      append_power(num, num_first, name, m.curve[i] * (degree_powers ? grading_.curve_degrees()[i] : 1));
    }
    for (std::size_t i = 0; i < m.chart.size(); ++i) {
      std::string name = i < chart_names.size() ? chart_names[i]
                                                : default_name("x", i, m.chart.size());
      if (m.chart[i] > 0) append_power(num, num_first, name, m.chart[i]);
      if (m.chart[i] < 0) append_power(den, den_first, name, -m.chart[i]);
    }
    if (m.z > 0) append_power(num, num_first, "z", m.z);
    if (m.z < 0) append_power(den, den_first, "z", -m.z);

    const bool has_num = !num_first, has_den = !den_first;
    const bool unit_coeff = c.get_num() == 1;
    if (!unit_coeff || !has_num) {
      os << c.get_num();
      if (has_num) os << '*';
    }
    if (has_num) os << num.str();
    Integer cden = c.get_den();
    if (cden != 1 || has_den) {
      os << '/';
      const bool compound = (cden != 1 && has_den) || den.str().find('*') != std::string::npos;
      if (compound) os << '(';
      if (cden != 1) {
        os << cden;
        if (has_den) os << '*';
      }
      if (has_den) os << den.str();
      if (compound) os << ')';
    }
  }
  return os.str();
}

// ---------------------------------------------------------------- free functions

GradedSeries pow(const GradedSeries& f, int n) {
  if (n < 0) throw DomainError("negative power of a series");
  GradedSeries result = GradedSeries::one(f.grading());
  GradedSeries base = f;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n) base *= base;
  }
  return result;
}

GradedSeries constant_term(const GradedSeries& f) {
  GradedSeries r(f.grading());
  for (const auto& [m, c] : f.terms())
    if (m.chart_is_zero()) r.add_term(m, c);
  return r;
}

namespace {

// Number of powers of f needed before every further term falls off the
// truncation, or nullopt when some term has degree zero.
std::optional<int> nilpotency_order(const GradedSeries& f) {
  if (f.is_zero()) return 0;
  const int dmin = f.min_degree();
  if (dmin <= 0) return std::nullopt;
  return f.grading().truncation() / dmin;
}

int resolve_order(const GradedSeries& f, std::optional<int> max_order, const char* what) {
  if (f.constant_coefficient() != 0)
    throw DomainError(std::string(what) + ": argument has a nonzero constant term");
  if (max_order) {
    if (*max_order < 0) throw DomainError(std::string(what) + ": negative order");
    auto nil = nilpotency_order(f);
    return nil ? std::min(*max_order, *nil) : *max_order;
  }
  auto nil = nilpotency_order(f);
  if (!nil)
    throw DomainError(std::string(what) +
                      ": series has degree-zero terms; an explicit order is required");
  return *nil;
}

}  // namespace

GradedSeries series_exp(const GradedSeries& f, std::optional<int> max_order) {
  const int order = resolve_order(f, max_order, "exp");
  GradedSeries result = GradedSeries::one(f.grading());
  GradedSeries term = result;
  for (int k = 1; k <= order; ++k) {
    term *= f;
    term *= Rational(1, k);
    if (term.is_zero()) break;
    result += term;
  }
  return result;
}

GradedSeries series_log(const GradedSeries& f, std::optional<int> max_order) {
  if (f.constant_coefficient() != 1) throw DomainError("log: constant term must be 1");
  GradedSeries h = f - GradedSeries::one(f.grading());
  const int order = resolve_order(h, max_order, "log");
  GradedSeries result(f.grading());
  GradedSeries power = GradedSeries::one(f.grading());
  for (int k = 1; k <= order; ++k) {
    power *= h;
    if (power.is_zero()) break;
    result += power * Rational(k % 2 ? 1 : -1, k);
  }
  return result;
}

namespace {

int& exponent_of(Monomial& m, Variable v) {
  switch (v.kind) {
    case Variable::Kind::curve: return m.curve.at(v.index);
    case Variable::Kind::chart: return m.chart.at(v.index);
    case Variable::Kind::z: return m.z;
  }
  return m.z;
}

int exponent_of(const Monomial& m, Variable v) {
  return exponent_of(const_cast<Monomial&>(m), v);
}

GradedSeries cut_in_variable(const GradedSeries& f, Variable v, int order) {
  GradedSeries r(f.grading());
  for (const auto& [m, c] : f.terms())
    if (exponent_of(m, v) <= order) r.add_term(m, c);
  return r;
}

}  // namespace

GradedSeries substitute(const GradedSeries& f, Variable var, const GradedSeries& g) {
  if (!(f.grading() == g.grading())) throw StructuralError("substitute: grading mismatch");
  int emax = 0;
  for (const auto& [m, c] : f.terms()) {
    const int e = exponent_of(m, var);
    if (e < 0) throw DomainError("substitute: variable occurs with a negative exponent");
    emax = std::max(emax, e);
  }
  std::vector<GradedSeries> powers{GradedSeries::one(g.grading())};
  for (int e = 1; e <= emax; ++e) powers.push_back(powers.back() * g);

  GradedSeries result(f.grading());
  for (const auto& [m, c] : f.terms()) {
    Monomial rest = m;
    const int e = exponent_of(m, var);
    exponent_of(rest, var) = 0;
    result += GradedSeries::term(f.grading(), rest, c) * powers[e];
  }
  return result;
}

GradedSeries revert(const GradedSeries& f, Variable var, std::optional<int> max_order) {
  const Grading& g = f.grading();
  const GradedSeries u = GradedSeries::variable(g, var);
  // The variable itself lies above the truncation: everything is zero.
  if (u.is_zero()) return u;
  const Monomial um = u.terms().begin()->first;

  for (const auto& [m, c] : f.terms()) {
    Monomial probe = m;
    exponent_of(probe, var) = 0;
    if (!probe.is_unit()) throw DomainError("revert: series involves variables other than the one reverted");
    if (exponent_of(m, var) < 1) throw DomainError("revert: series has a constant or negative-power term");
  }
  if (f.coefficient(um) == 0) throw DomainError("revert: zero linear term");
  if (f.coefficient(um) != 1) throw DomainError("revert: leading coefficient must be 1");

  int order;
  if (var.kind == Variable::Kind::curve) {
    order = g.truncation() / g.curve_degrees()[var.index];
    if (max_order) order = std::min(order, *max_order);
  } else {
    if (!max_order) throw DomainError("revert: chart or z variable needs an explicit order");
    order = *max_order;
  }

  // f(u) = u + h(u) with h = O(u^2); iterate g <- u - h(g), one order per pass.
  const GradedSeries h = f - u;
  GradedSeries inverse = cut_in_variable(u, var, order);
  for (int pass = 1; pass < order; ++pass)
    inverse = cut_in_variable(u - substitute(h, var, inverse), var, order);
  return inverse;
}

}  // namespace lgmk
