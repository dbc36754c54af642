#include "lgmk/gwabs.hpp"

#include "lgmk/error.hpp"

namespace lgmk {

ClassLaurent JFunction::hypergeometric(const IntVec& beta) const {
  auto it = terms.find(beta);
  if (it == terms.end()) return ClassLaurent(ring.get());
  if (std::all_of(beta.begin(), beta.end(), [](int b) { return b == 0; }))
    return ClassLaurent::monomial(*ring, ring->unit(), 0);
  ClassLaurent h(ring.get());
  for (const auto& [e, c] : it->second.terms()) h.add(e - 1, c);
  return h;
}

namespace {

// z * prod_j prod_{a<=0}(D_j + a z) / prod_{a<=d_j}(D_j + a z)
ClassLaurent toric_term(const CohomologyRing& ring, const ToricJSource& src, const IntVec& beta) {
  ClassLaurent term = ClassLaurent::monomial(ring, ring.unit(), 1);
  for (std::size_t i = 0; i < src.divisor_classes.size(); ++i) {
    int d = 0;
    for (std::size_t j = 0; j < beta.size(); ++j) d += beta[j] * src.intersection[j][i];
    const Class& D = src.divisor_classes[i];
    for (int a = 1; a <= d; ++a) term = term * ClassLaurent::inverse_linear(ring, D, a);
    for (int a = d + 1; a <= 0; ++a) term = term * ClassLaurent::linear(ring, D, a);
  }
  return term;
}

}  // namespace

JFunction j_function(const ToricFanoPair& pair, int truncation) {
  return j_function(pair, pair.cohomology().zero(), truncation);
}

JFunction j_function(const ToricFanoPair& pair, const Class& tau02, int truncation) {
  if (truncation < 0) throw StructuralError("truncation must be non-negative");
  const CohomologyRing& ring = pair.cohomology();
  if (tau02.size() != ring.size() || !ring.is_homogeneous(tau02, 1))
    throw DomainError("tau_{0,2} must be an H^2 class");
  JFunction j;
  j.ring = pair.ring;
  j.truncation = truncation;
  j.tau02 = tau02;
  if (!pair.toric_j && pair.point_invariants.empty() && pair.r > 0)
    throw UnsupportedError("J-source missing: supply toric data or point invariants");
  j.point_channel_only = !pair.toric_j;

  for (const auto& beta : pair.effective_classes(truncation)) {
    const bool zero = pair.degree(beta) == 0;
    if (zero) {
      ClassLaurent t = ClassLaurent::monomial(ring, ring.unit(), 1);
      t.add(0, tau02);
      j.terms.emplace(beta, t);
      continue;
    }
    if (pair.toric_j) {
      j.terms.emplace(beta, toric_term(ring, *pair.toric_j, beta));
    } else {
      ClassLaurent t(&ring);
      auto it = pair.point_invariants.find(beta);
      if (it != pair.point_invariants.end())
        for (const auto& [k, v] : it->second) {
          Class c = ring.unit();
          c[ring.unit_index()] = v;
          t.add(-k - 1, c);
        }
      j.terms.emplace(beta, t);
    }
  }
  return j;
}

Rational point_invariant(const JFunction& j, const IntVec& beta, int k) {
  auto it = j.terms.find(beta);
  if (it == j.terms.end()) throw DomainError("curve class beyond the J-function truncation");
  if (k < 0) return 0;
  return j.ring->h0(it->second.at(-k - 1));
}

namespace {

GradedSeries period(const ToricFanoPair& pair, int truncation, bool regularized) {
  const JFunction j = j_function(pair, truncation);
  const Grading g = pair.grading(0, truncation);
  GradedSeries s(g);
  for (const auto& [beta, term] : j.terms) {
    const int deg = pair.degree(beta);
    Rational c = deg == 0 ? Rational(1) : point_invariant(j, beta, deg - 2);
    if (regularized) c *= factorial(deg);
    s.add_term(Monomial(beta, {}, 0), c);
  }
  return s;
}

}  // namespace

GradedSeries quantum_period(const ToricFanoPair& pair, int truncation) {
  return period(pair, truncation, false);
}

GradedSeries regularized_quantum_period(const ToricFanoPair& pair, int truncation) {
  return period(pair, truncation, true);
}

std::vector<Rational> coefficients_by_degree(const GradedSeries& f) {
  std::vector<Rational> out(f.grading().truncation() + 1);
  for (const auto& [m, c] : f.terms()) {
    if (!m.chart_is_zero() || m.z != 0) throw StructuralError("coefficients_by_degree: series has chart or z exponents");
    out[f.grading().degree(m)] += c;
  }
  return out;
}

}  // namespace lgmk
