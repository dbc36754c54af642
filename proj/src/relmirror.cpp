#include "lgmk/relmirror.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "lgmk/error.hpp"
#include "lgmk/lgmirror.hpp"

namespace lgmk {

namespace {

std::string vec_string(const IntVec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

bool in_cone(const ToricFanoPair& pair, int sigma, int i) {
  const auto& cone = pair.max_cones.at(sigma);
  return std::binary_search(cone.begin(), cone.end(), i);
}

// Every l in Z^k_{>=0} with sum <= bound.
std::vector<IntVec> extension_exponents(std::size_t k, int bound) {
  std::vector<IntVec> out;
  IntVec l(k, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i == k) {
      out.push_back(l);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      l[i] = v;
      rec(i + 1, left - v);
    }
    l[i] = 0;
  };
  rec(0, bound);
  return out;
}

void check_data(const ToricFanoPair& pair, const ExtendedData& data) {
  for (const auto& a : data.vectors) {
    if (static_cast<int>(a.size()) != pair.m()) throw StructuralError("extension vector has the wrong arity");
    if (std::any_of(a.begin(), a.end(), [](int v) { return v < 0; }))
      throw DomainError("extension vectors must be non-negative");
  }
  if (data.midage_cone && (*data.midage_cone < 0 || *data.midage_cone >= static_cast<int>(pair.max_cones.size())))
    throw StructuralError("mid-age cone index out of range");
  if (data.max_extension_order < 0) throw DomainError("negative extension order");
}

}  // namespace

IntVec i_function_sector(const ToricFanoPair& pair, const IntVec& beta, const ExtendedData& data, const IntVec& l) {
  IntVec s = pair.d_vector(beta);
  for (auto& v : s) v = -v;
  for (std::size_t i = 0; i < data.vectors.size(); ++i)
    for (int j = 0; j < pair.m(); ++j) s[j] += l[i] * data.vectors[i][j];
  return s;
}

ClassLaurent hypergeometric_factor(const ToricFanoPair& pair, const JFunction& j, const IntVec& beta,
                                   const ExtendedData& data, const IntVec& l, int midage) {
  if (j.point_channel_only) throw UnsupportedError("relative I-function needs the full J-function");
  if (l.size() != data.vectors.size()) throw StructuralError("extension exponents do not match the data");
  if (midage && !data.midage_cone) throw StructuralError("mid-age exponent without a mid-age cone");
  const CohomologyRing& ring = pair.cohomology();
  auto it = j.terms.find(beta);
  if (it == j.terms.end()) throw DomainError("curve class beyond the J-function truncation");

  ClassLaurent term = it->second;
  const IntVec d = pair.d_vector(beta);
  int lsum = midage;
  Rational lfact = 1;
  for (int v : l) {
    lsum += v;
    lfact *= factorial(v);
  }
  for (int jx = 0; jx < pair.m(); ++jx) {
    const Class& D = pair.divisor_classes[jx];
    if (d[jx] < 0) throw UnsupportedError("D_j . beta < 0: mirror map in D unsupported");
    for (int a = 1; a <= d[jx]; ++a) term = term * ClassLaurent::linear(ring, D, a);
    int e = d[jx];
    for (std::size_t i = 0; i < l.size(); ++i) e -= l[i] * data.vectors[i][jx];
    // A mid-age entry is formally infinite along the cone, so e is never positive there.
    if (midage && in_cone(pair, *data.midage_cone, jx)) continue;
    if (e > 0) term = term * ClassLaurent::inverse_linear(ring, D, e);
  }
  ClassLaurent shifted(&ring);
  for (const auto& [z, c] : term.terms()) shifted.add(z - lsum, c);
  return shifted * (1 / lfact);
}

RelativeIFunction relative_i_function(const ToricFanoPair& pair, const ExtendedData& data, int truncation) {
  check_data(pair, data);
  const JFunction j = j_function(pair, truncation);
  const CohomologyRing& ring = pair.cohomology();
  RelativeIFunction out;
  out.truncation = truncation;
  out.data = data;
  const auto ls = extension_exponents(data.vectors.size(), data.max_extension_order);
  const int midage_max = data.midage_cone ? 1 : 0;

  for (const auto& beta : pair.effective_classes(truncation)) {
    for (const auto& l : ls) {
      for (int b = 0; b <= midage_max; ++b) {
        const IntVec s = i_function_sector(pair, beta, data, l);
        bool nonempty;
        int dim = 0;
        if (b) {
          nonempty = true;
          for (int i = 0; i < pair.m(); ++i)
            if (s[i] != 0 && !in_cone(pair, *data.midage_cone, i)) nonempty = false;
        } else {
          nonempty = stratum_nonempty(pair, s);
          if (nonempty) dim = stratum_dimension(pair, s);
        }
        if (!nonempty) {
          out.diagnostics.push_back("dropped beta=" + vec_string(beta) + " l=" + vec_string(l) +
                                    (b ? " with mid-age" : "") + ": empty stratum for sector " + vec_string(s));
          continue;
        }
        const ClassLaurent term = hypergeometric_factor(pair, j, beta, data, l, b);
        Class stratum = ring.unit();
        for (int i = 0; i < pair.m(); ++i)
          if (s[i] != 0) stratum = ring.multiply(stratum, pair.divisor_classes[i]);
        for (const auto& [z, c] : term.terms()) {
          IFunctionKey key{beta, l, b, z, {s, SectorIndex::Tag::identity}};
          const Rational id = ring.h0(c);
          if (id != 0) out.coefficients[key] = id;
          if (!b && dim > 0) {
            const Rational pt = ring.integrate(ring.multiply(c, stratum));
            key.sector.tag = SectorIndex::Tag::point;
            if (pt != 0) out.coefficients[key] = pt;
          }
        }
      }
    }
  }
  return out;
}

MirrorMap extended_mirror_map(const ToricFanoPair& pair, const ExtendedData& data, int truncation) {
  const RelativeIFunction i = relative_i_function(pair, data, truncation);
  MirrorMap map;
  map.diagnostics = i.diagnostics;
  const Grading g = pair.grading(static_cast<int>(data.vectors.size()), truncation);
  for (const auto& [key, c] : i.coefficients) {
    if (key.z != 0 || key.sector.tag != SectorIndex::Tag::identity || key.midage) continue;
    const bool skeleton = std::all_of(key.beta.begin(), key.beta.end(), [](int v) { return v == 0; }) &&
                          std::all_of(key.l.begin(), key.l.end(), [](int v) { return v == 0; });
    if (skeleton) continue;
    auto [it, inserted] = map.entries.try_emplace(key.sector.s, GradedSeries(g));
    it->second.add_term(Monomial(key.beta, key.l, 0), c);
  }
  for (auto it = map.entries.begin(); it != map.entries.end();) it = it->second.is_zero() ? map.entries.erase(it) : std::next(it);
  // Bare x_{a_i}[1]_{a_i} entries are part of the extended skeleton, not corrections.
  map.is_trivial = true;
  for (const auto& [s, series] : map.entries)
    for (const auto& [m, c] : series.terms()) {
      const int lsum = std::accumulate(m.chart.begin(), m.chart.end(), 0);
      const bool bare = lsum == 1 && std::all_of(m.curve.begin(), m.curve.end(), [](int v) { return v == 0; }) && c == 1;
      if (!bare) map.is_trivial = false;
    }
  return map;
}

MirrorMap mirror_map(const ToricFanoPair& pair, int truncation) {
  return extended_mirror_map(pair, ExtendedData{}, truncation);
}

GradedSeries mirror_correction(const ToricFanoPair& pair, const MirrorMap& map, int truncation) {
  int chart = 0;
  if (!map.entries.empty()) chart = static_cast<int>(map.entries.begin()->second.grading().chart_vars());
  GradedSeries total(pair.grading(chart, truncation));
  for (const auto& [s, series] : map.entries) total += series.truncated(truncation);
  return total;
}

bool triviality_criterion(const ToricFanoPair& pair, int truncation) {
  for (const auto& beta : pair.effective_classes(truncation)) {
    if (pair.degree(beta) == 0) continue;
    const IntVec d = pair.d_vector(beta);
    if (std::count_if(d.begin(), d.end(), [](int v) { return v > 0; }) < 2) return false;
  }
  return true;
}

GradedSeries proper_potential_generator(const ToricFanoPair& pair, int truncation) {
  if (pair.m() != 1) throw UnsupportedError("proper potential needs a smooth (one-component) divisor");
  const JFunction j = j_function(pair, truncation);
  GradedSeries g(pair.grading(0, truncation));
  for (const auto& beta : pair.effective_classes(truncation)) {
    const int db = pair.intersection_number(0, beta);
    if (db < 2) continue;
    g.add_term(Monomial(beta, {}, 0), point_invariant(j, beta, db - 2) * factorial(db - 1));
  }
  return g;
}

ProperPotential proper_potential(const ToricFanoPair& pair, int truncation) {
  if (pair.r != 1) throw UnsupportedError("proper potential inversion is implemented for Picard rank 1");
  ProperPotential out;
  out.g = proper_potential_generator(pair, truncation);
  const Grading& g1 = out.g.grading();
  const int delta = pair.intersection[0][0];
  const GradedSeries q = GradedSeries::variable(g1, Variable::curve_var(0));
  out.mirror = q * series_exp(out.g * Rational(delta));
  out.inverse = revert(out.mirror, Variable::curve_var(0));
  const GradedSeries factor = series_exp(substitute(out.g, Variable::curve_var(0), out.inverse));
  out.potential = GradedSeries(pair.grading(1, truncation));
  for (const auto& [m, c] : factor.terms()) out.potential.add_term(Monomial(m.curve, {1 - delta * m.curve[0]}, 0), c);
  return out;
}

// ---------------------------------------------------------------- invariants

namespace {

Rational via_i_function(const ToricFanoPair& pair, const InvariantSpec& spec, const IntVec& residual_sector) {
  // Group equal contact vectors into extension data with multiplicities.
  ExtendedData data;
  IntVec l;
  for (const auto& p : spec.contact) {
    auto it = std::find(data.vectors.begin(), data.vectors.end(), p);
    if (it == data.vectors.end()) {
      data.vectors.push_back(p);
      l.push_back(1);
    } else {
      ++l[it - data.vectors.begin()];
    }
  }
  data.midage_cone = spec.midage_cone;
  data.max_extension_order = static_cast<int>(spec.contact.size());
  const int midage = spec.midage_cone ? 1 : 0;
  const int truncation = pair.degree(spec.beta);

  const MirrorMap map = extended_mirror_map(pair, data, truncation);
  if (!map.is_trivial)
    throw UnsupportedError("extended mirror map is nontrivial; coefficient matching needs the mirror transform");

  const JFunction j = j_function(pair, truncation);
  const IntVec s = i_function_sector(pair, spec.beta, data, l);
  if (s != residual_sector) return 0;
  const ClassLaurent term = hypergeometric_factor(pair, j, spec.beta, data, l, midage);
  Rational value = pair.cohomology().h0(term.at(-spec.psi - 1));
  for (int v : l) value *= factorial(v);
  return value;
}

}  // namespace

Rational extract_invariant(const ToricFanoPair& pair, const InvariantSpec& spec) {
  const CohomologyRing& ring = pair.cohomology();
  if (static_cast<int>(spec.beta.size()) != pair.r) throw StructuralError("curve class has the wrong arity");
  if (static_cast<int>(spec.output.size()) != pair.m()) throw StructuralError("output sector has the wrong arity");
  for (const auto& p : spec.contact) {
    if (static_cast<int>(p.size()) != pair.m()) throw StructuralError("contact vector has the wrong arity");
    if (std::any_of(p.begin(), p.end(), [](int v) { return v < 0; }))
      throw UnsupportedError("negative contact insertions are outside the supported patterns");
  }

  // Untwisted insertions: string and divisor equations.
  Rational factor = 1;
  int psi = spec.psi;
  for (const auto& phi : spec.classes) {
    if (phi.size() != ring.size()) throw StructuralError("class has the wrong size");
    for (std::size_t k = 0; k < ring.size(); ++k)
      if (phi[k] != 0 && ring.complex_degree(k) > 1) throw UnsupportedError("requires Birkhoff factorization: unsupported");
  }
  for (const auto& phi : spec.classes) {
    const Rational unit_part = ring.h0(phi);
    const Class h2 = ring.degree_part(phi, 1);
    const bool has_h2 = std::any_of(h2.begin(), h2.end(), [](const Rational& q) { return q != 0; });
    if (unit_part != 0 && has_h2) throw UnsupportedError("mixed-degree insertion; split it into homogeneous classes");
    if (unit_part != 0) {
      if (psi == 0) return 0;
      --psi;
      factor *= unit_part;
    } else if (has_h2) {
      factor *= pair.pairing(h2, spec.beta);
    } else {
      return 0;
    }
  }
  if (factor == 0) return 0;

  // Contact orders must add up to D.beta, strata must be nonempty and the
  // virtual dimension n - 3 + #markings must match.
  const IntVec d = pair.d_vector(spec.beta);
  IntVec total = spec.output;
  for (const auto& p : spec.contact)
    for (int i = 0; i < pair.m(); ++i) total[i] += p[i];
  if (total != d) return 0;

  const int markings = static_cast<int>(spec.contact.size()) + (spec.midage_cone ? 2 : 1);
  const int vdim = pair.n - 3 + markings;
  int degree_sum = psi;
  IntVec residual;  // I-function sector the output pairs with
  if (spec.midage_cone) {
    const int sigma = *spec.midage_cone;
    for (int i = 0; i < pair.m(); ++i)
      if (spec.output[i] != 0 && !in_cone(pair, sigma, i)) return 0;
    degree_sum += pair.n;  // [pt]_{-b+k} on the point D_sigma, n negative entries
    residual = spec.output;
    for (auto& v : residual) v = -v;
  } else {
    if (!stratum_nonempty(pair, spec.output)) return 0;
    degree_sum += deg0(pair, {spec.output, SectorIndex::Tag::point});
    residual = spec.output;
    for (auto& v : residual) v = -v;
  }
  if (degree_sum != vdim) return 0;

  using Route = InvariantSpec::Route;
  Route route = spec.route;
  const bool all_in_b = std::all_of(spec.contact.begin(), spec.contact.end(), [&](const IntVec& p) { return pair.in_B(p); });
  if (route == Route::automatic) {
    if (pair.kind == ToricFanoPair::Kind::toric && spec.midage_cone && spec.contact.size() == 1 && all_in_b)
      route = Route::theta;
    else if (pair.kind == ToricFanoPair::Kind::toric && !spec.midage_cone && all_in_b && spec.contact.size() >= 2 &&
             pair.in_B(residual) && psi == static_cast<int>(spec.contact.size()) - 2)
      route = Route::structure;
    else
      route = Route::i_function;
  }

  switch (route) {
    case Route::theta: {
      if (!spec.midage_cone || spec.contact.size() != 1) throw UnsupportedError("theta pattern needs one contact insertion and a mid-age");
      const Monomial mono = pair.chart_monomial_of(spec.contact[0], *spec.midage_cone);
      return mono.curve == spec.beta ? factor : Rational(0);
    }
    case Route::structure: {
      if (spec.midage_cone) throw UnsupportedError("structure-constant pattern has no mid-age");
      IntVec u(pair.m(), 0);
      for (const auto& p : spec.contact)
        for (int i = 0; i < pair.m(); ++i) u[i] += p[i];
      const auto [r, beta] = decompose(pair, u);
      return (r == residual && beta == spec.beta) ? factor : Rational(0);
    }
    case Route::i_function:
    case Route::automatic:
      break;
  }
  return factor * via_i_function(pair, InvariantSpec{spec.contact, {}, spec.midage_cone, spec.output, psi, spec.beta},
                                 residual);
}

}  // namespace lgmk
