#include <doctest.h>

#include "lgmk/error.hpp"
#include "lgmk/fanogeom.hpp"
#include "lgmk/gwabs.hpp"
#include "lgmk/lgmirror.hpp"
#include "lgmk/relmirror.hpp"

using namespace lgmk;

TEST_CASE("non-extended P2 I-function") {
  const auto p = load_preset("P2");
  const JFunction j = j_function(p, 3);
  // at d = (1,1,1) the hypergeometric factors cancel to J_line
  const ClassLaurent raw = hypergeometric_factor(p, j, {1}, ExtendedData{}, {}, 0);
  CHECK(raw.terms() == j.terms.at({1}).terms());
  CHECK(i_function_sector(p, {1}, ExtendedData{}, {}) == IntVec{-1, -1, -1});

  const RelativeIFunction I = relative_i_function(p, ExtendedData{}, 3);
  // beta = 0 gives z [1]_0; the line lands on an empty stratum and is dropped
  IFunctionKey unit{{0}, {}, 0, 1, {{0, 0, 0}, SectorIndex::Tag::identity}};
  CHECK(I.coefficients.at(unit) == 1);
  CHECK(I.coefficients.size() == 1);
  REQUIRE(I.diagnostics.size() == 1);
  CHECK(I.diagnostics[0].find("empty stratum") != std::string::npos);
}

TEST_CASE("mirror maps") {
  CHECK(mirror_map(load_preset("P2"), 6).is_trivial);
  CHECK(triviality_criterion(load_preset("P2"), 6));
  CHECK(triviality_criterion(load_preset("P1xP1"), 6));

  const auto cubic = load_preset("P2_cubic");
  CHECK_FALSE(triviality_criterion(cubic, 6));
  const MirrorMap m = mirror_map(cubic, 9);
  CHECK_FALSE(m.is_trivial);
  // oracle: <pt psi^{3d-2}> (3d-1)! from the toric J-function of P2
  const JFunction j = j_function(load_preset("P2"), 9);
  for (int d = 1; d <= 3; ++d) {
    const Rational expect = point_invariant(j, {d}, 3 * d - 2) * factorial(3 * d - 1);
    CHECK(m.entries.at({-3 * d}).coefficient(Monomial({d}, {})) == expect);
  }
  CHECK(m.entries.at({-3}).coefficient(Monomial({1}, {})) == 2);
  CHECK(m.entries.at({-6}).coefficient(Monomial({2}, {})) == 15);
  const GradedSeries corr = mirror_correction(cubic, m, 6);
  CHECK(coefficients_by_degree(corr) == std::vector<Rational>{0, 0, 0, 2, 0, 0, 15});
}

TEST_CASE("extended mirror map entries for x_{e_i} are bare") {
  const auto p = load_preset("P2");
  ExtendedData d;
  d.vectors = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  d.max_extension_order = 2;
  const MirrorMap m = extended_mirror_map(p, d, 6);
  CHECK(m.is_trivial);
  CHECK(m.entries.size() == 3);
  for (int i = 0; i < 3; ++i) {
    IntVec e(3, 0);
    e[i] = 1;
    const GradedSeries& s = m.entries.at(e);
    CHECK(s.size() == 1);
    IntVec chart(3, 0);
    chart[i] = 1;
    CHECK(s.coefficient(Monomial({0}, chart)) == 1);
  }
}

TEST_CASE("proper potential of the cubic") {
  const auto cubic = load_preset("P2_cubic");
  const ProperPotential pp = proper_potential(cubic, 15);
  CHECK(pp.potential.to_string({}, {"x"}, false) ==
        "x + 2*t/x^2 + 5*t^2/x^5 + 32*t^3/x^8 + 286*t^4/x^11 + 3038*t^5/x^14");

  // the mirror relation inverts exactly to order 6
  const ProperPotential p6 = proper_potential(cubic, 18);
  const GradedSeries y = GradedSeries::variable(p6.mirror.grading(), Variable::curve_var(0));
  CHECK(substitute(p6.mirror, Variable::curve_var(0), p6.inverse) == y);
  CHECK(substitute(p6.inverse, Variable::curve_var(0), p6.mirror) == y);

  // its classical period is the quantum period of P2
  const ProperPotential p12 = proper_potential(cubic, 12);
  CHECK(coefficients_by_degree(classical_period(p12.potential)) ==
        coefficients_by_degree(regularized_quantum_period(load_preset("P2"), 12)));

  CHECK(proper_potential(cubic, 0).potential.to_string({}, {"x"}) == "x");
  CHECK_THROWS_AS(proper_potential(load_preset("P2"), 6), UnsupportedError);
}

TEST_CASE("invariants") {
  const auto p = load_preset("P2");
  InvariantSpec frob;
  frob.contact = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  frob.output = {0, 0, 0};
  frob.psi = 1;
  frob.beta = {1};
  for (auto route : {InvariantSpec::Route::structure, InvariantSpec::Route::i_function, InvariantSpec::Route::automatic}) {
    frob.route = route;
    CHECK(extract_invariant(p, frob) == 1);
  }
  // wrong descendant power violates the dimension count
  frob.psi = 0;
  frob.route = InvariantSpec::Route::automatic;
  CHECK(extract_invariant(p, frob) == 0);

  // theta_{e_1} = x_1: the beta = 0 coefficient sits at k = -e_1
  InvariantSpec th;
  th.contact = {{1, 0, 0}};
  th.midage_cone = 0;
  th.beta = {0};
  th.output = {-1, 0, 0};
  CHECK(extract_invariant(p, th) == 1);
  th.output = {0, 0, 0};
  CHECK(extract_invariant(p, th) == 0);

  // theta_{e_3} = t/(x_1 x_2)
  th.contact = {{0, 0, 1}};
  th.beta = {1};
  th.output = {1, 1, 0};
  CHECK(extract_invariant(p, th) == 1);

  InvariantSpec bad = th;
  bad.classes = {p.cohomology().point_class()};
  CHECK_THROWS_AS(extract_invariant(p, bad), UnsupportedError);
}
