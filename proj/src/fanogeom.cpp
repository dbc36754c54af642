#include "lgmk/fanogeom.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "lgmk/error.hpp"
#include "lgmk/linalg.hpp"

namespace lgmk {

using nlohmann::json;

int ToricFanoPair::degree(const IntVec& beta) const {
  if (static_cast<int>(beta.size()) != r) throw StructuralError("curve class has the wrong arity");
  int d = 0;
  for (int j = 0; j < r; ++j) d += beta[j] * anticanonical_degree[j];
  return d;
}

int ToricFanoPair::intersection_number(int i, const IntVec& beta) const {
  if (i < 0 || i >= m()) throw StructuralError("divisor index out of range");
  if (static_cast<int>(beta.size()) != r) throw StructuralError("curve class has the wrong arity");
  for (int b : beta)
    if (b < 0) throw DomainError("curve class outside the effective cone");
  int d = 0;
  for (int j = 0; j < r; ++j) d += beta[j] * intersection[j][i];
  return d;
}

IntVec ToricFanoPair::d_vector(const IntVec& beta) const {
  IntVec d(m());
  for (int i = 0; i < m(); ++i) d[i] = intersection_number(i, beta);
  return d;
}

std::vector<IntVec> ToricFanoPair::effective_classes(int max_degree) const {
  std::vector<IntVec> out;
  IntVec beta(r, 0);
  std::function<void(int, int)> rec = [&](int j, int budget) {
    if (j == r) {
      out.push_back(beta);
      return;
    }
    for (int c = 0; c * anticanonical_degree[j] <= budget; ++c) {
      beta[j] = c;
      rec(j + 1, budget - c * anticanonical_degree[j]);
    }
    beta[j] = 0;
  };
  if (max_degree >= 0) rec(0, max_degree);
  std::stable_sort(out.begin(), out.end(),
                   [&](const IntVec& a, const IntVec& b) { return degree(a) < degree(b); });
  return out;
}

Grading ToricFanoPair::grading(int chart_vars, int truncation) const {
  return Grading(anticanonical_degree, chart_vars, truncation);
}

int ToricFanoPair::cone_containing(const IntVec& p) const {
  if (static_cast<int>(p.size()) != m()) throw StructuralError("lattice point has the wrong arity");
  for (std::size_t s = 0; s < max_cones.size(); ++s) {
    bool ok = true;
    for (int i = 0; i < m() && ok; ++i)
      if (p[i] != 0 && !std::binary_search(max_cones[s].begin(), max_cones[s].end(), i)) ok = false;
    if (ok) return static_cast<int>(s);
  }
  return -1;
}

bool ToricFanoPair::in_B(const IntVec& p) const {
  if (std::any_of(p.begin(), p.end(), [](int v) { return v < 0; })) return false;
  return cone_containing(p) >= 0;
}

const IntVec& ToricFanoPair::chart_class(int i, int sigma) const {
  if (sigma < 0 || sigma >= static_cast<int>(chart_classes.size()))
    throw StructuralError("maximal cone index out of range");
  return chart_classes.at(sigma).at(i);
}

Monomial ToricFanoPair::chart_monomial_of(const IntVec& p, int sigma) const {
  if (static_cast<int>(p.size()) != m()) throw StructuralError("lattice point has the wrong arity");
  const IntVec& cone = max_cones.at(sigma);
  Monomial mono = Monomial::unit(r, cone.size());
  for (int i = 0; i < m(); ++i) {
    if (p[i] == 0) continue;
    auto pos = std::find(cone.begin(), cone.end(), i);
    if (pos != cone.end()) {
      mono.chart[pos - cone.begin()] += p[i];
      continue;
    }
    const IntVec& b0 = chart_class(i, sigma);
    for (int j = 0; j < r; ++j) mono.curve[j] += p[i] * b0[j];
    for (std::size_t c = 0; c < cone.size(); ++c) mono.chart[c] -= p[i] * intersection_number(cone[c], b0);
  }
  for (int e : mono.curve)
    if (e < 0) throw DomainError("lattice point with negative entries has no chart monomial");
  return mono;
}

std::vector<Rational> ToricFanoPair::divisor_coordinates(const Class& phi) const {
  if (!ring->is_homogeneous(phi, 1)) throw UnsupportedError("class is not in H^2");
  RationalMatrix a(ring->size(), m());
  for (int i = 0; i < m(); ++i)
    for (std::size_t k = 0; k < ring->size(); ++k) a(k, i) = divisor_classes[i][k];
  auto sol = solve(a, phi);
  if (!sol) throw UnsupportedError("class is not a combination of boundary divisors");
  return *sol;
}

Rational ToricFanoPair::pairing(const Class& phi, const IntVec& beta) const {
  const auto c = divisor_coordinates(phi);
  Rational s = 0;
  for (int i = 0; i < m(); ++i) s += c[i] * intersection_number(i, beta);
  return s;
}

bool stratum_nonempty(const ToricFanoPair& pair, const IntVec& s) {
  return pair.cone_containing(s) >= 0;
}

int stratum_dimension(const ToricFanoPair& pair, const IntVec& s) {
  if (!stratum_nonempty(pair, s)) throw DomainError("empty stratum");
  const int support = static_cast<int>(std::count_if(s.begin(), s.end(), [](int v) { return v != 0; }));
  return pair.n - support;
}

int deg0(const ToricFanoPair& pair, const SectorIndex& sector) {
  const int neg = static_cast<int>(std::count_if(sector.s.begin(), sector.s.end(), [](int v) { return v < 0; }));
  if (sector.tag == SectorIndex::Tag::identity) return neg;
  return stratum_dimension(pair, sector.s) + neg;
}

int intersection_number(const ToricFanoPair& pair, int i, const IntVec& beta) {
  return pair.intersection_number(i, beta);
}

Monomial chart_monomial(const ToricFanoPair& pair, const IntVec& p, int sigma) {
  if (!pair.in_B(p)) throw DomainError("lattice point is not in B(Z)");
  return pair.chart_monomial_of(p, sigma);
}

// ---------------------------------------------------------------- loading

namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw GeometryError(GeometryErrorCode::malformed, what);
}

Rational rational_of(const json& v) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_string()) return parse_rational(v.get<std::string>());
  malformed("expected an integer or a \"p/q\" string, got " + v.dump());
}

Class class_of(const json& v, std::size_t size) {
  if (!v.is_array() || v.size() != size) malformed("class has the wrong length: " + v.dump());
  Class c;
  for (const auto& x : v) c.push_back(rational_of(x));
  return c;
}

std::vector<IntVec> int_rows(const json& v, const char* what) {
  if (!v.is_array()) malformed(std::string(what) + " must be an array of arrays");
  std::vector<IntVec> rows;
  for (const auto& row : v) {
    if (!row.is_array()) malformed(std::string(what) + " must be an array of arrays");
    IntVec r;
    for (const auto& x : row) {
      if (!x.is_number_integer()) malformed(std::string(what) + " entries must be integers");
      r.push_back(x.get<int>());
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

std::shared_ptr<CohomologyRing> ring_of(const json& c, int dim) {
  if (!c.is_object()) malformed("cohomology must be an object");
  std::vector<BasisElement> basis;
  for (const auto& b : c.at("basis")) basis.push_back({b.at("name").get<std::string>(), b.at("degree").get<int>()});
  std::vector<MultEntry> mult;
  for (const auto& e : c.value("mult", json::array())) {
    if (!e.is_array() || e.size() != 4) malformed("mult entries are [i, j, k, coeff]");
    mult.push_back({e[0].get<int>(), e[1].get<int>(), e[2].get<int>(), rational_of(e[3])});
  }
  std::vector<Rational> integration;
  for (const auto& x : c.at("integration")) integration.push_back(rational_of(x));
  return std::make_shared<CohomologyRing>(std::move(basis), mult, std::move(integration), dim);
}

int abs_det(const std::vector<IntVec>& rows) {
  RationalMatrix m = RationalMatrix::from_int_rows(rows);
  Rational d = determinant(m);
  return static_cast<int>(Rational(abs(d)).get_num().get_si());
}

void validate_toric(ToricFanoPair& p) {
  const int m = static_cast<int>(p.rays.size());
  if (m != p.m()) malformed("rays and divisor_classes disagree in length");
  for (const auto& v : p.rays)
    if (static_cast<int>(v.size()) != p.n) malformed("ray of the wrong dimension");
  for (auto& cone : p.max_cones) {
    std::sort(cone.begin(), cone.end());
    if (std::adjacent_find(cone.begin(), cone.end()) != cone.end())
      throw GeometryError(GeometryErrorCode::non_simplicial_cone, "repeated ray in a cone");
    for (int i : cone)
      if (i < 0 || i >= m) malformed("cone refers to a missing ray");
    if (static_cast<int>(cone.size()) != p.n)
      throw GeometryError(GeometryErrorCode::non_simplicial_cone,
                          "maximal cone with " + std::to_string(cone.size()) + " rays in dimension " +
                              std::to_string(p.n));
    std::vector<IntVec> gens;
    for (int i : cone) gens.push_back(p.rays[i]);
    const int d = abs_det(gens);
    if (d == 0) throw GeometryError(GeometryErrorCode::non_simplicial_cone, "cone rays are linearly dependent");
    if (d != 1)
      throw GeometryError(GeometryErrorCode::singular_cone, "cone rays span a sublattice of index " + std::to_string(d));
  }
  for (int i = 0; i < m; ++i) {
    bool found = false;
    for (const auto& cone : p.max_cones) found = found || std::binary_search(cone.begin(), cone.end(), i);
    if (!found) throw GeometryError(GeometryErrorCode::not_pure_dimensional, "ray " + std::to_string(i));
  }
  for (int j = 0; j < p.r; ++j) {
    IntVec sum(p.n, 0);
    for (int i = 0; i < m; ++i)
      for (int k = 0; k < p.n; ++k) sum[k] += p.intersection[j][i] * p.rays[i][k];
    if (std::any_of(sum.begin(), sum.end(), [](int v) { return v != 0; }))
      throw GeometryError(GeometryErrorCode::fan_relation_violated,
                          "sum_i (D_i . beta_" + std::to_string(j + 1) + ") v_i != 0");
  }
}

void compute_chart_classes(ToricFanoPair& p) {
  p.chart_classes.assign(p.max_cones.size(), std::vector<IntVec>(p.m(), IntVec(p.r, 0)));
  for (std::size_t s = 0; s < p.max_cones.size(); ++s) {
    const auto& cone = p.max_cones[s];
    std::vector<int> outside;
    for (int j = 0; j < p.m(); ++j)
      if (!std::binary_search(cone.begin(), cone.end(), j)) outside.push_back(j);
    for (int i : outside) {
      RationalMatrix a(outside.size(), p.r);
      std::vector<Rational> b(outside.size());
      for (std::size_t e = 0; e < outside.size(); ++e) {
        for (int k = 0; k < p.r; ++k) a(e, k) = p.intersection[k][outside[e]];
        b[e] = outside[e] == i ? 1 : 0;
      }
      auto sol = solve(a, b);
      if (!sol || rank(a) != static_cast<std::size_t>(p.r))
        throw UnsupportedError("chart relation unsolvable for divisor " + std::to_string(i) + " in cone " +
                               std::to_string(s));
      IntVec beta;
      for (const auto& q : *sol) {
        if (q.get_den() != 1 || q < 0)
          throw UnsupportedError("chart relation unsolvable: class is not effective and integral");
        beta.push_back(static_cast<int>(q.get_num().get_si()));
      }
      p.chart_classes[s][i] = beta;
    }
  }
}

}  // namespace

ToricFanoPair load_pair_json(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    malformed(std::string("JSON parse error: ") + e.what());
  }
  if (!doc.is_object()) malformed("geometry must be a JSON object");

  ToricFanoPair p;
  try {
    p.name = doc.value("name", "custom");
    const std::string kind = doc.value("kind", "toric");
    if (kind == "toric") p.kind = ToricFanoPair::Kind::toric;
    else if (kind == "smooth_divisor") p.kind = ToricFanoPair::Kind::smooth_divisor;
    else malformed("unknown kind '" + kind + "'");
    p.n = doc.at("dim").get<int>();
    if (p.n < 0) malformed("negative dimension");
    if (doc.contains("rays")) p.rays = int_rows(doc["rays"], "rays");
    p.max_cones = int_rows(doc.at("max_cones"), "max_cones");
    p.r = doc.at("ne_generators").get<int>();
    p.intersection = int_rows(doc.at("intersection"), "intersection");
    p.ring = ring_of(doc.at("cohomology"), p.n);
    for (const auto& c : doc.at("divisor_classes")) p.divisor_classes.push_back(class_of(c, p.ring->size()));
  } catch (const json::exception& e) {
    malformed(std::string("missing or mistyped field: ") + e.what());
  }

  const int m = p.m();
  if (p.r < 0 || static_cast<int>(p.intersection.size()) != p.r) malformed("intersection needs one row per NE generator");
  for (const auto& row : p.intersection)
    if (static_cast<int>(row.size()) != m) malformed("intersection rows need one entry per divisor");

  for (int j = 0; j < p.r; ++j) p.anticanonical_degree.push_back(std::accumulate(p.intersection[j].begin(), p.intersection[j].end(), 0));
  if (doc.contains("anticanonical_degree")) {
    IntVec given = doc["anticanonical_degree"].get<IntVec>();
    if (given != p.anticanonical_degree)
      throw GeometryError(GeometryErrorCode::not_anticanonical, "sum_i D_i . beta differs from the stated (-K) . beta");
  }

  p.c1 = p.ring->zero();
  for (const auto& d : p.divisor_classes) {
    if (!p.ring->is_homogeneous(d, 1)) malformed("divisor classes must lie in H^2");
    for (std::size_t k = 0; k < d.size(); ++k) p.c1[k] += d[k];
  }
  if (doc.contains("c1")) {
    Class c1 = class_of(doc["c1"], p.ring->size());
    if (c1 != p.c1) throw GeometryError(GeometryErrorCode::not_anticanonical, "sum of divisor classes is not c1");
  }
  for (int j = 0; j < p.r; ++j)
    if (p.anticanonical_degree[j] <= 0)
      throw GeometryError(GeometryErrorCode::not_fano, "(-K) . beta_" + std::to_string(j + 1) + " <= 0");

  p.ring->validate();

  if (p.kind == ToricFanoPair::Kind::toric) {
    validate_toric(p);
    ToricJSource src{p.divisor_classes, p.intersection};
    p.toric_j = src;
  } else {
    if (m != 1) malformed("smooth_divisor pairs have exactly one divisor");
    p.max_cones = {{0}};
  }

  if (doc.contains("j_source")) {
    const auto& js = doc["j_source"];
    ToricJSource src;
    for (const auto& c : js.at("divisor_classes")) src.divisor_classes.push_back(class_of(c, p.ring->size()));
    src.intersection = int_rows(js.at("intersection"), "j_source.intersection");
    if (static_cast<int>(src.intersection.size()) != p.r) malformed("j_source needs one row per NE generator");
    Class c1 = p.ring->zero();
    for (const auto& d : src.divisor_classes)
      for (std::size_t k = 0; k < d.size(); ++k) c1[k] += d[k];
    if (c1 != p.c1) throw GeometryError(GeometryErrorCode::not_anticanonical, "j_source divisors do not sum to c1");
    for (int j = 0; j < p.r; ++j) {
      if (static_cast<int>(src.intersection[j].size()) != static_cast<int>(src.divisor_classes.size()))
        malformed("j_source intersection rows need one entry per divisor");
      if (std::accumulate(src.intersection[j].begin(), src.intersection[j].end(), 0) != p.anticanonical_degree[j])
        throw GeometryError(GeometryErrorCode::not_anticanonical, "j_source degrees disagree with (-K) . beta");
    }
    p.toric_j = src;
  }
  if (doc.contains("point_invariants")) {
    for (const auto& e : doc["point_invariants"]) {
      IntVec beta = e.at("beta").get<IntVec>();
      if (static_cast<int>(beta.size()) != p.r) malformed("point invariant class has the wrong arity");
      p.point_invariants[beta][e.at("psi").get<int>()] = rational_of(e.at("value"));
    }
  }

  if (p.kind == ToricFanoPair::Kind::toric) compute_chart_classes(p);
  return p;
}

ToricFanoPair load_pair_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GeometryError(GeometryErrorCode::malformed, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return load_pair_json(ss.str());
}

ToricFanoPair load_preset(const std::string& name) { return load_pair_json(preset_json(name)); }

ToricFanoPair load_pair(const std::string& preset_or_path) {
  const auto names = preset_names();
  if (std::find(names.begin(), names.end(), preset_or_path) != names.end()) return load_preset(preset_or_path);
  std::ifstream probe(preset_or_path);
  if (probe) return load_pair_file(preset_or_path);
  throw GeometryError(GeometryErrorCode::unknown_preset, "'" + preset_or_path + "' is neither a preset nor a readable file");
}

}  // namespace lgmk
