#include "lgmk/gammaosc.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "lgmk/error.hpp"
#include "lgmk/gwabs.hpp"
#include "lgmk/lgmirror.hpp"

namespace lgmk {

namespace mp = boost::multiprecision;

// ------------------------------------------------------------------ constants

std::vector<Rational> bernoulli_numbers(int n) {
  // sum_{k<=m} C(m+1, k) B_k = 0
  std::vector<Rational> b(n + 1);
  b[0] = 1;
  for (int m = 1; m <= n; ++m) {
    Rational s = 0;
    Integer binom = 1;  // C(m+1, k)
    for (int k = 0; k < m; ++k) {
      s += Rational(binom) * b[k];
      binom = binom * (m + 1 - k) / (k + 1);
    }
    b[m] = -s / Rational(m + 1);
  }
  return b;
}

namespace {

constexpr int kEmN = 40;
constexpr int kEmTerms = 30;

const std::vector<Rational>& bernoulli_table() {
  static const std::vector<Rational> b = bernoulli_numbers(2 * kEmTerms);
  return b;
}

Real real_of(const Rational& q) { return to_real<Real>(q); }

}  // namespace

Real zeta(int k) {
  if (k < 2) throw DomainError("zeta(k) needs k >= 2");
  const Real s = k;
  const Real n = kEmN;
  Real sum = 0;
  for (int j = 1; j < kEmN; ++j) sum += mp::pow(Real(j), -s);
  sum += mp::pow(n, 1 - s) / (s - 1) + mp::pow(n, -s) / 2;
  const auto& b = bernoulli_table();
  // rising factorial s (s+1) ... (s+2j-2) / (2j)!
  Real rising = s;
  Real fact = 2;
  for (int j = 1; j <= kEmTerms; ++j) {
    if (j > 1) {
      rising *= (s + 2 * j - 3) * (s + 2 * j - 2);
      fact *= Real(2 * j - 1) * (2 * j);
    }
    sum += real_of(b[2 * j]) / fact * rising * mp::pow(n, -s - 2 * j + 1);
  }
  return sum;
}

Real euler_gamma() {
  const Real n = kEmN;
  Real h = 0;
  for (int j = 1; j <= kEmN; ++j) h += Real(1) / j;
  Real g = h - mp::log(n) - 1 / (2 * n);
  const auto& b = bernoulli_table();
  for (int j = 1; j <= kEmTerms; ++j) g += real_of(b[2 * j]) / (2 * j * mp::pow(n, 2 * j));
  return g;
}

Real reference_euler_gamma() { return Real("0.5772156649015328606065120900824024310421593359399235988"); }

Real reference_zeta(int k) {
  static const char* table[] = {
      "1.644934066848226436472415166646025189218949901206798438",
      "1.202056903159594285399738161511449990764986292340498882",
      "1.082323233711138191516003696541167902774750951918726908",
      "1.036927755143369926331365486457034168057080919501912812",
      "1.017343061984449139714517929790920527901817490032853562",
      "1.008349277381922826839797549849796759599863560565238706",
      "1.00407735619794433937868523850865246525896079064985002",
      "1.002008392826082214417852769232412060485605851394888757",
      "1.000994575127818085337145958900319017006019531564477517",
  };
  if (k < 2 || k > 10) throw DomainError("reference zeta values are stored for 2 <= k <= 10");
  return Real(table[k - 2]);
}

// ---------------------------------------------------------------- Gamma class

GammaClass gamma_class(const CohomologyRing& ring, const std::vector<Class>& roots, int precision) {
  if (precision < 1 || precision > 50) throw DomainError("precision must be between 1 and 50 digits");
  const int n = ring.dim();
  using RC = std::vector<Real>;
  RC log_class(ring.size(), Real(0));
  // ch_k = sum_i D_i^k / k!, c1 = ch_1
  std::vector<RC> powers;
  for (const auto& d : roots) powers.push_back(ring.to_real_class<Real>(d));
  std::vector<RC> current = powers;
  Real kfact = 1;
  for (int k = 1; k <= n; ++k) {
    if (k > 1) {
      kfact *= k;
      for (std::size_t i = 0; i < roots.size(); ++i) current[i] = ring.multiply_real(current[i], powers[i]);
    }
    RC chk(ring.size(), Real(0));
    for (const auto& c : current)
      for (std::size_t j = 0; j < c.size(); ++j) chk[j] += c[j] / kfact;
    Real w;
    if (k == 1) {
      w = -euler_gamma();
    } else {
      Real km1 = 1;
      for (int j = 2; j < k; ++j) km1 *= j;
      w = (k % 2 ? -1 : 1) * zeta(k) * km1;
    }
    for (std::size_t j = 0; j < chk.size(); ++j) log_class[j] += w * chk[j];
  }
  GammaClass g;
  g.coeffs = ring.exp_nilpotent_real(log_class);
  g.precision = precision;
  g.order = n;
  return g;
}

GammaClass gamma_class(const ToricFanoPair& pair, int precision) {
  if (!pair.toric_j) throw DomainError("Chern character data of TX missing (no toric divisors)");
  return gamma_class(pair.cohomology(), pair.toric_j->divisor_classes, precision);
}

// --------------------------------------------------------------- Gamma function

std::complex<double> lanczos_gamma(std::complex<double> z) {
  static const double c[] = {0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
                             771.32342877765313,   -176.61502916214059,   12.507343278686905,
                             -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
  if (z.imag() == 0 && z.real() <= 0 && z.real() == std::floor(z.real()))
    throw DomainError("Gamma has a pole at a non-positive integer");
  // Upward recurrence keeps the reflection formula out of the evaluation.
  std::complex<double> divisor = 1;
  while (z.real() < 0.5) {
    divisor *= z;
    z += 1.0;
  }
  z -= 1.0;
  std::complex<double> x = c[0];
  for (int i = 1; i < 9; ++i) x += c[i] / (z + static_cast<double>(i));
  const std::complex<double> t = z + 7.5;
  return std::sqrt(2 * std::numbers::pi) * std::pow(t, z + 0.5) * std::exp(-t) * x / divisor;
}

double reflection_check(std::complex<double> c) {
  if (c.imag() == 0 && c.real() == std::round(c.real())) throw DomainError("reflection identity has a pole at integer c");
  const std::complex<double> i(0, 1);
  const double pi = std::numbers::pi;
  const auto lhs = lanczos_gamma(1.0 - c) * lanczos_gamma(1.0 + c) * (1.0 - std::exp(-2 * pi * i * c));
  const auto rhs = 2 * pi * i * c * std::exp(-pi * i * c);
  return std::abs(lhs - rhs);
}

std::vector<double> gamma_taylor(int k_max) {
  constexpr int M = 64;
  constexpr double r = 0.5;
  std::vector<double> out(k_max + 1, 0.0);
  for (int j = 0; j < M; ++j) {
    const double th = 2 * std::numbers::pi * j / M;
    const auto w = std::polar(r, th);
    const auto g = lanczos_gamma(1.0 + w);
    for (int k = 0; k <= k_max; ++k) out[k] += (g * std::polar(std::pow(r, -k), -k * th)).real() / M;
  }
  return out;
}

// ------------------------------------------------------------------ labels

const char* to_string(Sheaf s) { return s == Sheaf::O_pt ? "Opt" : "OX"; }
const char* to_string(Cycle c) { return c == Cycle::compact ? "compact" : "real"; }

Sheaf parse_sheaf(const std::string& s) {
  if (s == "Opt" || s == "O_pt") return Sheaf::O_pt;
  if (s == "OX" || s == "O_X") return Sheaf::O_X;
  throw DomainError("unknown sheaf '" + s + "' (expected Opt or OX)");
}

Cycle parse_cycle(const std::string& s) {
  if (s == "compact") return Cycle::compact;
  if (s == "real") return Cycle::real;
  throw DomainError("unknown cycle '" + s + "' (expected compact or real)");
}

Class parse_phi(const ToricFanoPair& pair, const std::string& label) {
  const CohomologyRing& ring = pair.cohomology();
  if (label == "1") return ring.unit();
  if (label == "c1") return pair.c1;
  for (std::size_t k = 0; k < ring.size(); ++k)
    if (ring.basis()[k].name == label) return ring.basis_class(k);
  if (label.size() > 1 && label[0] == 'D') {
    const int i = std::atoi(label.c_str() + 1);
    if (i >= 1 && i <= pair.m()) return pair.divisor_classes[i - 1];
  }
  throw DomainError("unknown class '" + label + "' (expected 1, c1, D<i> or a basis name)");
}

// ------------------------------------------------------------------ RHS

namespace {

void check_phi(const CohomologyRing& ring, const Class& phi) {
  if (phi.size() != ring.size()) throw StructuralError("class has the wrong size");
  for (std::size_t k = 0; k < ring.size(); ++k)
    if (phi[k] != 0 && ring.complex_degree(k) > 1)
      throw UnsupportedError("requires Birkhoff factorization: unsupported");
}

bool has_h2(const CohomologyRing& ring, const Class& phi) {
  const Class h2 = ring.degree_part(phi, 1);
  return std::any_of(h2.begin(), h2.end(), [](const Rational& q) { return q != 0; });
}

// (phi - z (phi.beta)) J_beta(-z)/(-z)
ClassLaurent channel(const ToricFanoPair& pair, const JFunction& j, const Class& phi, const IntVec& beta) {
  const CohomologyRing& ring = pair.cohomology();
  ClassLaurent lin(&ring);
  lin.add(0, phi);
  const Rational pb = has_h2(ring, phi) ? pair.pairing(ring.degree_part(phi, 1), beta) : Rational(0);
  if (pb != 0) {
    Class u = ring.unit();
    for (auto& q : u) q *= -pb;
    lin.add(1, u);
  }
  return lin * j.hypergeometric(beta).negate_z();
}

}  // namespace

GradedSeries rhs_compact_series(const ToricFanoPair& pair, const Class& phi, int truncation) {
  const CohomologyRing& ring = pair.cohomology();
  check_phi(ring, phi);
  const JFunction j = j_function(pair, truncation);
  if (j.point_channel_only && has_h2(ring, phi))
    throw UnsupportedError("H^2 insertions need the full J-function (toric divisors)");
  GradedSeries out(pair.grading(0, truncation));
  for (const auto& beta : pair.effective_classes(truncation)) {
    const ClassLaurent c = channel(pair, j, phi, beta);
    for (const auto& [e, cls] : c.terms()) {
      const Rational v = ring.h0(cls);
      if (v != 0) out.add_term(Monomial(beta, {}, e), v);
    }
  }
  return out;
}

GradedSeries lhs_compact_series(const ToricFanoPair& pair, const Class& phi, int truncation) {
  check_phi(pair.cohomology(), phi);
  const GradedSeries w = potential(pair, truncation).charts.at(0);
  const Grading& g = w.grading();
  const GradedSeries inv_z = GradedSeries::term(g, Monomial(IntVec(g.curve_vars(), 0), IntVec(g.chart_vars(), 0), -1));
  const GradedSeries e = series_exp(-(w * inv_z), truncation);
  const GradedSeries check = phi_function(pair, phi, 0, truncation);
  return strip_chart(constant_term(check * e));
}

double evaluate_series(const GradedSeries& f, double z, double t) {
  if (f.grading().chart_vars() != 0) throw StructuralError("evaluate_series needs a chart-free series");
  Real s = 0;
  for (const auto& [m, c] : f.terms())
    s += real_of(c) * mp::pow(Real(t), f.grading().degree(m)) * mp::pow(Real(z), m.z);
  return s.convert_to<double>();
}

RhsValue rhs_gamma(const ToricFanoPair& pair, Sheaf sheaf, const Class& phi, double z, double t, int truncation) {
  return rhs_gamma(pair, sheaf, phi, pair.cohomology().zero(), z, t, truncation);
}

RhsValue rhs_gamma(const ToricFanoPair& pair, Sheaf sheaf, const Class& phi, const Class& tau02, double z, double t,
                   int truncation) {
  if (!(z > 0)) throw DomainError("z must be positive");
  if (!(t >= 0)) throw DomainError("t must be non-negative");
  const CohomologyRing& ring = pair.cohomology();
  check_phi(ring, phi);
  if (tau02.size() != ring.size() || !ring.is_homogeneous(tau02, 1)) throw DomainError("tau_{0,2} must be an H^2 class");
  const JFunction j = j_function(pair, truncation);
  if (j.point_channel_only && (sheaf == Sheaf::O_X || has_h2(ring, phi)))
    throw UnsupportedError("this check needs the full J-function (toric divisors)");

  using RC = std::vector<Real>;
  const Real zr = z;
  const Real tr = t;
  // Per-degree sums of S_z[(phi - z(phi.beta)) H_beta(-z)] weighted by t^deg e^{tau.beta}.
  std::map<int, RC> by_degree;
  for (const auto& beta : pair.effective_classes(truncation)) {
    const int deg = pair.degree(beta);
    if (t == 0 && deg > 0) continue;
    const ClassLaurent c = channel(pair, j, phi, beta).scale_by_degree();
    const Real weight = mp::pow(tr, deg) * mp::exp(real_of(pair.pairing(tau02, beta)));
    RC& acc = by_degree.try_emplace(deg, RC(ring.size(), Real(0))).first->second;
    for (const auto& [e, cls] : c.terms()) {
      const Real ze = mp::pow(zr, e) * weight;
      for (std::size_t k = 0; k < cls.size(); ++k)
        if (cls[k] != 0) acc[k] += ze * real_of(cls[k]);
    }
  }

  std::function<Real(const RC&)> pair_with;
  if (sheaf == Sheaf::O_pt) {
    pair_with = [&](const RC& s) { return s[ring.unit_index()]; };
  } else {
    if (t == 0) throw DomainError("the O_X right-hand side needs t > 0");
    // exp(c1 ln z - tau - c1 ln t) and the Gamma class
    RC ex = ring.to_real_class<Real>(pair.c1);
    const RC tau = ring.to_real_class<Real>(tau02);
    const Real lz = mp::log(zr) - mp::log(tr);
    for (std::size_t k = 0; k < ex.size(); ++k) ex[k] = ex[k] * lz - tau[k];
    const RC weight = ring.multiply_real(ring.exp_nilpotent_real(ex), gamma_class(pair).coeffs);
    pair_with = [&ring, weight](const RC& s) { return ring.integrate_real(ring.multiply_real(weight, s)); };
  }

  RhsValue out;
  Real total = 0;
  Real last = 0;
  for (const auto& [deg, s] : by_degree) {
    last = pair_with(s);
    total += last;
  }
  out.value = total.convert_to<double>();
  out.tail = by_degree.size() > 1 ? mp::abs(last).convert_to<double>() : 0.0;
  return out;
}

// ------------------------------------------------------------------ real LHS

namespace {

struct NumericTerm {
  double coeff;
  IntVec chart;
};

std::vector<NumericTerm> numeric_terms(const GradedSeries& f, double t) {
  std::vector<NumericTerm> out;
  for (const auto& [m, c] : f.terms()) {
    if (m.z != 0) throw StructuralError("numeric evaluation of a z-dependent series");
    out.push_back({c.get_d() * std::pow(t, f.grading().degree(m)), m.chart});
  }
  return out;
}

double eval_terms(const std::vector<NumericTerm>& terms, const double* u) {
  double s = 0;
  for (const auto& term : terms) {
    double e = 0;
    for (std::size_t k = 0; k < term.chart.size(); ++k) e += term.chart[k] * u[k];
    s += term.coeff * std::exp(e);
  }
  return s;
}

int potential_truncation(const ToricFanoPair& pair) {
  int deg = 0;
  for (int i = 0; i < pair.m(); ++i) deg = std::max(deg, pair.degree(pair.chart_class(i, 0)));
  return std::max(deg, 1);
}

}  // namespace

RealIntegral lhs_real(const ToricFanoPair& pair, const Class& phi, double z, double t, const QuadConfig& quad,
                      int truncation) {
  if (!(z > 0)) throw DomainError("z must be positive");
  if (!(t >= 1e-6)) throw DomainError("t below 1e-6: the real integral diverges as t -> 0");
  check_phi(pair.cohomology(), phi);
  const int n = pair.n;
  if (n > 2) throw UnsupportedError("real-cycle quadrature is implemented for dimension <= 2");
  if (n == 0) {
    RealIntegral r;
    r.value = pair.cohomology().h0(phi).get_d();
    return r;
  }
  const int trunc = std::max(truncation, potential_truncation(pair));
  const auto w = numeric_terms(potential(pair, trunc).charts.at(0), t);
  for (const auto& term : w)
    if (!(term.coeff > 0)) throw DomainError("potential has a nonpositive monomial on the real locus; divergent integral");
  const auto check = numeric_terms(phi_function(pair, phi, 0, trunc), t);
  auto f = [&](const double* u) { return eval_terms(check, u) * std::exp(-eval_terms(w, u) / z); };
  RealIntegral r;
  r.quad = integrate_box(f, n, quad);
  r.value = r.quad.value;
  r.error = r.quad.error;
  r.flagged = r.quad.flagged;
  return r;
}

// ------------------------------------------------------------------ reports

double relative_error(double lhs, double rhs) { return std::abs(lhs - rhs) / std::max(std::abs(rhs), 1e-30); }

GammaReport verify(const ToricFanoPair& pair, Cycle cycle, Sheaf sheaf, const Class& phi, double z, double t,
                   int truncation, const VerifyOptions& options) {
  if (!(z > 0)) throw DomainError("z must be positive");
  GammaReport rep;
  rep.cycle = cycle;
  rep.sheaf = sheaf;
  rep.pair = pair.name;
  rep.phi = options.phi_label;
  rep.z = z;
  rep.t = t;
  rep.truncation = truncation;
  rep.tolerance = options.tolerance;
  rep.normalization = options.normalization;
  if (cycle == Cycle::compact) {
    if (sheaf != Sheaf::O_pt) throw UnsupportedError("the compact cycle is mirror to O_pt");
    const GradedSeries lhs = lhs_compact_series(pair, phi, truncation);
    const GradedSeries rhs = rhs_compact_series(pair, phi, truncation);
    rep.exact_match = lhs == rhs;
    rep.lhs = evaluate_series(lhs, z, t);
    rep.rhs = evaluate_series(rhs, z, t);
    rep.quad_digest = "exact constant term";
  } else {
    if (sheaf != Sheaf::O_X) throw UnsupportedError("the real cycle is mirror to O_X");
    const RealIntegral l = lhs_real(pair, phi, z, t, options.quad, truncation);
    const RhsValue r = rhs_gamma(pair, sheaf, phi, z, t, truncation);
    rep.lhs = l.value;
    rep.rhs = r.value;
    rep.rhs_tail = r.tail;
    rep.quad_error = l.error;
    rep.quad_flagged = l.flagged;
    rep.quad_digest = options.quad.digest() + ";half_width_used=" + std::to_string(l.quad.half_width) +
                      ";intervals=" + std::to_string(l.quad.panels);
  }
  if (options.normalization == Normalization::two_pi_i && cycle == Cycle::compact) {
    const double scale = std::pow(2 * std::numbers::pi, pair.n);
    rep.lhs *= scale;
    rep.rhs *= scale;
    static const char* phases[] = {"1", "i", "-1", "-i"};
    rep.phase = phases[pair.n % 4];
  }
  rep.abs_err = std::abs(rep.lhs - rep.rhs);
  rep.rel_err = relative_error(rep.lhs, rep.rhs);
  rep.passed = rep.rel_err <= options.tolerance && rep.exact_match.value_or(true);
  return rep;
}

}  // namespace lgmk
