#include "lgmk/lgmirror.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "lgmk/error.hpp"
#include "lgmk/gwabs.hpp"
#include "lgmk/linalg.hpp"

namespace lgmk {

namespace {

void require_toric(const ToricFanoPair& pair, const char* what) {
  if (pair.kind != ToricFanoPair::Kind::toric)
    throw UnsupportedError(std::string(what) + " needs a toric boundary");
}

Grading curve_grading(const ToricFanoPair& pair, int truncation) { return pair.grading(0, truncation); }

GradedSeries curve_monomial(const ToricFanoPair& pair, const IntVec& beta, int truncation) {
  return GradedSeries::term(curve_grading(pair, truncation), Monomial(beta, {}, 0));
}

std::string vec_string(const IntVec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

}  // namespace

// ---------------------------------------------------------------- ThetaElement

ThetaElement ThetaElement::theta(const ToricFanoPair& pair, const IntVec& p, int truncation) {
  if (!pair.in_B(p)) throw DomainError("lattice point " + vec_string(p) + " is not in B(Z)");
  ThetaElement e{curve_grading(pair, truncation), {}};
  e.coeffs.emplace(p, GradedSeries::one(e.grading));
  return e;
}

GradedSeries ThetaElement::coefficient(const IntVec& p) const {
  auto it = coeffs.find(p);
  return it == coeffs.end() ? GradedSeries(grading) : it->second;
}

bool ThetaElement::operator==(const ThetaElement& other) const {
  if (!(grading == other.grading)) return false;
  auto nonzero = [](const ThetaElement& e) {
    std::map<IntVec, GradedSeries> out;
    for (const auto& [p, c] : e.coeffs)
      if (!c.is_zero()) out.emplace(p, c);
    return out;
  };
  return nonzero(*this) == nonzero(other);
}

std::string ThetaElement::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, c] : coeffs) {
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << '(' << c.to_string() << ")*theta" << vec_string(p);
  }
  return first ? "0" : os.str();
}

// ---------------------------------------------------------------- products

std::pair<IntVec, IntVec> decompose(const ToricFanoPair& pair, const IntVec& u) {
  require_toric(pair, "theta decomposition");
  const int budget = std::accumulate(u.begin(), u.end(), 0);
  std::vector<std::pair<IntVec, IntVec>> found;
  for (const auto& beta : pair.effective_classes(budget)) {
    IntVec r = u;
    const IntVec d = pair.d_vector(beta);
    for (int i = 0; i < pair.m(); ++i) r[i] -= d[i];
    if (pair.in_B(r)) found.emplace_back(r, beta);
  }
  if (found.empty()) throw InconsistencyError("no theta decomposition of " + vec_string(u));
  if (found.size() > 1)
    throw InconsistencyError("theta decomposition of " + vec_string(u) + " is not unique: " +
                             vec_string(found[0].first) + " and " + vec_string(found[1].first));
  return found.front();
}

ThetaElement multiply(const ToricFanoPair& pair, const ThetaElement& a, const ThetaElement& b) {
  if (!(a.grading == b.grading)) throw StructuralError("theta elements with different truncations");
  const int n = a.grading.truncation();
  ThetaElement out{a.grading, {}};
  std::map<IntVec, std::pair<IntVec, IntVec>> cache;
  for (const auto& [p, f] : a.coeffs) {
    if (f.is_zero()) continue;
    for (const auto& [q, g] : b.coeffs) {
      if (g.is_zero()) continue;
      IntVec u = p;
      for (std::size_t i = 0; i < u.size(); ++i) u[i] += q[i];
      auto it = cache.find(u);
      if (it == cache.end()) it = cache.emplace(u, decompose(pair, u)).first;
      const auto& [r, beta] = it->second;
      if (pair.degree(beta) > n) continue;
      GradedSeries term = f * g * curve_monomial(pair, beta, n);
      if (term.is_zero()) continue;
      auto [slot, inserted] = out.coeffs.try_emplace(r, term);
      if (!inserted) slot->second += term;
    }
  }
  for (auto it = out.coeffs.begin(); it != out.coeffs.end();) it = it->second.is_zero() ? out.coeffs.erase(it) : std::next(it);
  return out;
}

ThetaElement theta_product(const ToricFanoPair& pair, const IntVec& p1, const IntVec& p2, int truncation) {
  return multiply(pair, ThetaElement::theta(pair, p1, truncation), ThetaElement::theta(pair, p2, truncation));
}

ThetaElement theta_product_in_chart(const ToricFanoPair& pair, const IntVec& p1, const IntVec& p2, int sigma,
                                    int truncation) {
  require_toric(pair, "theta product");
  if (!pair.in_B(p1) || !pair.in_B(p2)) throw DomainError("theta product arguments must lie in B(Z)");
  const Monomial prod = pair.chart_monomial_of(p1, sigma) * pair.chart_monomial_of(p2, sigma);
  const IntVec& cone = pair.max_cones.at(sigma);
  const int budget = pair.degree(prod.curve);

  std::vector<std::pair<IntVec, IntVec>> found;
  for (const auto& beta : pair.effective_classes(budget)) {
    IntVec c = prod.curve;
    for (int j = 0; j < pair.r; ++j) c[j] -= beta[j];
    // Lattice point whose chart-sigma monomial is t^c x^{prod.chart}.
    IntVec r(pair.m());
    for (int i = 0; i < pair.m(); ++i) {
      int dc = 0;
      for (int j = 0; j < pair.r; ++j) dc += c[j] * pair.intersection[j][i];
      r[i] = dc;
    }
    for (std::size_t k = 0; k < cone.size(); ++k) r[cone[k]] += prod.chart[k];
    if (!pair.in_B(r)) continue;
    if (pair.chart_monomial_of(r, sigma) * Monomial(beta, IntVec(cone.size(), 0), 0) != prod) continue;
    found.emplace_back(r, beta);
  }
  if (found.size() != 1)
    throw InconsistencyError("chart decomposition in cone " + std::to_string(sigma) + " found " +
                             std::to_string(found.size()) + " candidates");
  ThetaElement out{curve_grading(pair, truncation), {}};
  GradedSeries coeff = curve_monomial(pair, found[0].second, truncation);
  if (!coeff.is_zero()) out.coeffs.emplace(found[0].first, coeff);
  return out;
}

GradedSeries frobenius_constant(const ToricFanoPair& pair, const std::vector<IntVec>& points, int truncation) {
  if (points.empty()) return GradedSeries::one(curve_grading(pair, truncation));
  ThetaElement acc = ThetaElement::theta(pair, points.front(), truncation);
  for (std::size_t k = 1; k < points.size(); ++k)
    acc = multiply(pair, acc, ThetaElement::theta(pair, points[k], truncation));
  return acc.coefficient(IntVec(pair.m(), 0));
}

// ---------------------------------------------------------------- potential

GradedSeries chart_series(const ToricFanoPair& pair, const IntVec& p, int sigma, int truncation) {
  const auto& cone = pair.max_cones.at(sigma);
  return GradedSeries::term(pair.grading(static_cast<int>(cone.size()), truncation), chart_monomial(pair, p, sigma));
}

std::string LGPotential::to_string(std::size_t sigma) const {
  return charts.at(sigma).to_string({}, chart_names.at(sigma));
}

LGPotential potential(const ToricFanoPair& pair, int truncation) {
  require_toric(pair, "the Landau-Ginzburg potential");
  LGPotential w;
  std::ostringstream expr;
  for (int i = 0; i < pair.m(); ++i) expr << (i ? " + " : "") << "theta_e" << i + 1;
  w.theta_expression = expr.str();
  for (std::size_t s = 0; s < pair.max_cones.size(); ++s) {
    const auto& cone = pair.max_cones[s];
    GradedSeries chart(pair.grading(static_cast<int>(cone.size()), truncation));
    for (int i = 0; i < pair.m(); ++i) {
      IntVec e(pair.m(), 0);
      e[i] = 1;
      chart += chart_series(pair, e, static_cast<int>(s), truncation);
    }
    std::vector<std::string> names;
    for (int i : cone) names.push_back("x" + std::to_string(i + 1));
    w.cones.push_back(cone);
    w.charts.push_back(std::move(chart));
    w.chart_names.push_back(std::move(names));
  }
  return w;
}

GradedSeries change_chart(const ToricFanoPair& pair, const GradedSeries& f, int sigma, int tau) {
  const auto& from = pair.max_cones.at(sigma);
  const auto& to = pair.max_cones.at(tau);
  GradedSeries out(f.grading().with_chart_vars(static_cast<int>(to.size())));
  for (const auto& [mono, c] : f.terms()) {
    IntVec v(pair.m());
    for (int i = 0; i < pair.m(); ++i)
      for (int j = 0; j < pair.r; ++j) v[i] += mono.curve[j] * pair.intersection[j][i];
    for (std::size_t k = 0; k < from.size(); ++k) v[from[k]] += mono.chart[k];
    Monomial image = pair.chart_monomial_of(v, tau);
    image.z = mono.z;
    out.add_term(image, c);
  }
  return out;
}

GradedSeries strip_chart(const GradedSeries& f) {
  GradedSeries out(f.grading().with_chart_vars(0));
  for (const auto& [m, c] : f.terms()) {
    if (!m.chart_is_zero()) throw StructuralError("strip_chart: series has chart exponents");
    out.add_term(Monomial(m.curve, {}, m.z), c);
  }
  return out;
}

GradedSeries classical_period(const GradedSeries& w) {
  // Each monomial of a Fano potential has degree 1 - (chart weight), so
  // constant_term(W^d) sits in degree d and d <= N suffices.
  const int n = w.grading().truncation();
  GradedSeries total = GradedSeries::one(w.grading());
  GradedSeries power = total;
  for (int d = 1; d <= n; ++d) {
    power *= w;
    total += constant_term(power);
  }
  return strip_chart(constant_term(total));
}

GradedSeries phi_function(const ToricFanoPair& pair, const Class& phi, int sigma, int truncation) {
  require_toric(pair, "phi functions");
  const CohomologyRing& ring = pair.cohomology();
  if (phi.size() != ring.size()) throw StructuralError("class has the wrong size");
  for (std::size_t k = 0; k < ring.size(); ++k)
    if (phi[k] != 0 && ring.complex_degree(k) > 1)
      throw UnsupportedError("requires Birkhoff factorization: unsupported");
  const auto& cone = pair.max_cones.at(sigma);
  const Grading g = pair.grading(static_cast<int>(cone.size()), truncation);
  GradedSeries out = GradedSeries::constant(g, ring.h0(phi));
  const Class h2 = ring.degree_part(phi, 1);
  if (std::any_of(h2.begin(), h2.end(), [](const Rational& q) { return q != 0; })) {
    for (int i = 0; i < pair.m(); ++i) {
      const Rational w = pair.pairing(h2, pair.chart_class(i, sigma));
      IntVec e(pair.m(), 0);
      e[i] = 1;
      out += chart_series(pair, e, sigma, truncation) * w;
    }
  }
  return out;
}

GradedSeries corrected_theta(const ToricFanoPair& pair, const IntVec& p, int sigma, int truncation,
                             const std::function<GradedSeries(const GradedSeries&)>& hook) {
  GradedSeries base = chart_series(pair, p, sigma, truncation);
  return hook ? hook(base) : base;
}

// ---------------------------------------------------------------- recurrences

std::string Recurrence::to_string() const {
  if (!found) return "none";
  std::ostringstream os;
  bool first_poly = true;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    std::ostringstream poly;
    int nonzero = 0;
    for (int e = static_cast<int>(coeffs[k].size()) - 1; e >= 0; --e) {
      const Integer& c = coeffs[k][e];
      if (c == 0) continue;
      poly << (nonzero ? (c < 0 ? " - " : " + ") : (c < 0 ? "-" : ""));
      Integer a = abs(c);
      if (a != 1 || e == 0) poly << a << (e ? "*" : "");
      if (e >= 1) poly << 'd';
      if (e > 1) poly << '^' << e;
      ++nonzero;
    }
    if (!nonzero) continue;
    if (!first_poly) os << " + ";
    first_poly = false;
    os << (nonzero > 1 ? "(" + poly.str() + ")" : poly.str()) << "*a(d" << (k ? "-" + std::to_string(k) : "") << ")";
  }
  os << " = 0";
  return os.str();
}

Recurrence qde_recurrence(const std::vector<Rational>& a, int max_order, int max_degree, int held_out) {
  const int count = static_cast<int>(a.size());
  if (held_out < 0 || max_order < 1 || max_degree < 0) throw DomainError("bad recurrence search bounds");
  if (count < 2 + held_out) throw DomainError("need more terms");
  const int fit_end = count - held_out;  // rows d < fit_end are fitted

  auto row = [&](int d, int order, int degree) {
    std::vector<Rational> r;
    for (int k = 0; k <= order; ++k) {
      Rational dp = 1;
      for (int e = 0; e <= degree; ++e) {
        r.push_back(dp * a[d - k]);
        dp *= d;
      }
    }
    return r;
  };

  bool any_tried = false;
  for (int order = 1; order <= max_order; ++order) {
    for (int degree = 0; degree <= max_degree; ++degree) {
      const int unknowns = (order + 1) * (degree + 1);
      const int rows = fit_end - order;
      if (rows < unknowns) continue;
      any_tried = true;
      std::vector<std::vector<Rational>> fit;
      for (int d = order; d < fit_end; ++d) fit.push_back(row(d, order, degree));
      for (const auto& v : nullspace(RationalMatrix::from_rows(fit))) {
        bool ok = true;
        for (int d = std::max(fit_end, order); d < count && ok; ++d) {
          Rational s = 0;
          const auto r = row(d, order, degree);
          for (std::size_t i = 0; i < r.size(); ++i) s += r[i] * v[i];
          ok = s == 0;
        }
        if (!ok) continue;
        auto ints = primitive_integer(v);
        // Sign convention: the top coefficient of P_0 is positive.
        int lead = -1;
        for (int e = degree; e >= 0 && lead < 0; --e)
          if (ints[e] != 0) lead = e;
        if (lead >= 0 && ints[lead] < 0)
          for (auto& x : ints) x = -x;
        Recurrence rec;
        rec.found = true;
        rec.order = order;
        rec.degree = degree;
        rec.fitted_terms = fit_end;
        rec.held_out = count - fit_end;
        for (int k = 0; k <= order; ++k)
          rec.coeffs.emplace_back(ints.begin() + k * (degree + 1), ints.begin() + (k + 1) * (degree + 1));
        return rec;
      }
    }
  }
  if (!any_tried) throw DomainError("need more terms");
  return Recurrence{};
}

PeriodSequence period_sequence(const GradedSeries& period) {
  const auto by_degree = coefficients_by_degree(period);
  int g = 0;
  for (std::size_t d = 1; d < by_degree.size(); ++d)
    if (by_degree[d] != 0) g = std::gcd(g, static_cast<int>(d));
  PeriodSequence seq;
  seq.step = g == 0 ? 1 : g;
  for (std::size_t d = 0; d < by_degree.size(); d += seq.step) seq.a.push_back(by_degree[d]);
  return seq;
}

}  // namespace lgmk
