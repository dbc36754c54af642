#include <doctest.h>

#include <cmath>
#include <json.hpp>
#include <numbers>

#include "lgmk/error.hpp"
#include "lgmk/fanogeom.hpp"
#include "lgmk/gammaosc.hpp"

using namespace lgmk;

namespace {

double bessel_2k0(double z, double t) { return 2 * std::cyl_bessel_k(0.0, 2 * t / z); }
double bessel_2tk1(double z, double t) { return 2 * t * std::cyl_bessel_k(1.0, 2 * t / z); }

// prod_i Gamma(1 + w_i H) over split roots w_i, as a polynomial in H mod H^{n+1}.
std::vector<double> split_root_product(const std::vector<int>& weights, int n) {
  const auto a = gamma_taylor(n);
  std::vector<double> r(n + 1, 0.0);
  r[0] = 1;
  for (int w : weights) {
    std::vector<double> next(n + 1, 0.0);
    for (int i = 0; i <= n; ++i)
      for (int j = 0; i + j <= n; ++j) next[i + j] += r[i] * a[j] * std::pow(w, j);
    r = next;
  }
  return r;
}

}  // namespace

TEST_CASE("zeta and Euler's constant against stored references") {
  CHECK(abs(euler_gamma() - reference_euler_gamma()) < Real("1e-45"));
  for (int k = 2; k <= 10; ++k) {
    CAPTURE(k);
    CHECK(abs(zeta(k) - reference_zeta(k)) < Real("1e-45"));
  }
  CHECK(abs(zeta(2) - Real(boost::multiprecision::pow(boost::math::constants::pi<Real>(), 2)) / 6) < Real("1e-45"));
  CHECK_THROWS_AS(zeta(1), DomainError);
  const auto b = bernoulli_numbers(12);
  CHECK(b[1] == Rational(-1, 2));
  CHECK(b[2] == Rational(1, 6));
  CHECK(b[4] == Rational(-1, 30));
  CHECK(b[12] == Rational(-691, 2730));
  CHECK(b[11] == 0);
}

TEST_CASE("Gamma classes") {
  CHECK(gamma_class(load_preset("point")).coeffs == std::vector<Real>{1});

  const double g = reference_euler_gamma().convert_to<double>();
  const double z2 = reference_zeta(2).convert_to<double>();
  const GammaClass p1 = gamma_class(load_preset("P1"));
  CHECK(p1.coefficient(0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(p1.coefficient(1) == doctest::Approx(-1.1544313298).epsilon(1e-10));

  const GammaClass p2 = gamma_class(load_preset("P2"));
  CHECK(p2.coefficient(1) == doctest::Approx(-3 * g).epsilon(1e-14));
  CHECK(p2.coefficient(2) == doctest::Approx(4.5 * g * g + 1.5 * z2).epsilon(1e-14));
  CHECK(p2.coefficient(2) == doctest::Approx(3.96669).epsilon(1e-5));
}

TEST_CASE("Gamma classes agree with split Chern root products") {
  const auto p1 = split_root_product({2}, 1);
  CHECK(std::abs(gamma_class(load_preset("P1")).coefficient(1) - p1[1]) < 1e-10);

  const auto p2 = split_root_product({1, 1, 1}, 2);
  const GammaClass g2 = gamma_class(load_preset("P2"));
  for (int k = 0; k <= 2; ++k) CHECK(std::abs(g2.coefficient(k) - p2[k]) < 1e-10);

  const auto p3 = split_root_product({1, 1, 1, 1}, 3);
  const GammaClass g3 = gamma_class(load_preset("P3"));
  for (int k = 0; k <= 3; ++k) CHECK(std::abs(g3.coefficient(k) - p3[k]) < 1e-10);

  // Gamma(1 + 2 H1) Gamma(1 + 2 H2), H1^2 = H2^2 = 0
  const auto a = gamma_taylor(1);
  const GammaClass gp = gamma_class(load_preset("P1xP1"));
  CHECK(std::abs(gp.coefficient(1) - 2 * a[1]) < 1e-10);
  CHECK(std::abs(gp.coefficient(2) - 2 * a[1]) < 1e-10);
  CHECK(std::abs(gp.coefficient(3) - 4 * a[1] * a[1]) < 1e-10);
}

TEST_CASE("missing Chern data is a domain error") {
  auto j = nlohmann::json::parse(preset_json("P2_cubic"));
  j.erase("j_source");
  j["point_invariants"] = {{{"beta", {1}}, {"psi", 1}, {"value", "1"}}};
  const auto pair = load_pair_json(j.dump());
  CHECK_THROWS_AS(gamma_class(pair), DomainError);
}

TEST_CASE("Lanczos Gamma") {
  for (double x : {0.1, 0.5, 1.0, 2.5, 7.3, 12.0, -0.5, -2.7}) {
    CAPTURE(x);
    CHECK(lanczos_gamma(x).real() == doctest::Approx(std::tgamma(x)).epsilon(1e-13));
  }
  // |Gamma(1 + i)|^2 = pi / sinh(pi)
  const double pi = std::numbers::pi;
  CHECK(std::norm(lanczos_gamma({1.0, 1.0})) == doctest::Approx(pi / std::sinh(pi)).epsilon(1e-13));
  CHECK_THROWS_AS(lanczos_gamma(0.0), DomainError);
  CHECK_THROWS_AS(lanczos_gamma(-3.0), DomainError);
  const auto a = gamma_taylor(2);
  const double g = reference_euler_gamma().convert_to<double>();
  CHECK(a[0] == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(a[1] == doctest::Approx(-g).epsilon(1e-12));
  CHECK(a[2] == doctest::Approx((g * g + pi * pi / 6) / 2).epsilon(1e-12));
}

TEST_CASE("reflection identity") {
  for (double c : {0.3, 0.5, 0.7, 1.5, -0.25}) {
    CAPTURE(c);
    CHECK(reflection_check(c) < 1e-12);
  }
  CHECK(reflection_check({0.3, 0.2}) < 1e-12);
  CHECK_THROWS_AS(reflection_check(0.0), DomainError);
  CHECK_THROWS_AS(reflection_check(2.0), DomainError);
}

TEST_CASE("compact right-hand side for O_pt") {
  const auto p1 = load_preset("P1");
  const Class one = p1.cohomology().unit();
  for (double z : {1.0, 2.0}) {
    double direct = 0, fact = 1;
    for (int d = 0; d <= 6; ++d) {
      if (d) fact *= d;
      direct += std::pow(0.1, 2 * d) * std::pow(z, -2 * d) / (fact * fact);
    }
    CHECK(rhs_gamma(p1, Sheaf::O_pt, one, z, 0.1, 12).value == doctest::Approx(direct).epsilon(1e-15));
  }
  CHECK(rhs_gamma(p1, Sheaf::O_pt, one, 1, 0.1, 12).value == doctest::Approx(1.0100250277951).epsilon(1e-12));
  for (const char* name : {"P1", "P2", "P1xP1", "P3"}) {
    const auto p = load_preset(name);
    CHECK(rhs_gamma(p, Sheaf::O_pt, p.cohomology().unit(), 1.5, 0.0, 8).value == 1.0);
  }
  CHECK_THROWS_AS(rhs_gamma(p1, Sheaf::O_pt, one, 0.0, 0.1, 8), DomainError);
  CHECK_THROWS_AS(rhs_gamma(p1, Sheaf::O_pt, one, -1.0, 0.1, 8), DomainError);
}

TEST_CASE("compact left-hand side against direct expansion") {
  // P2, phi = 1: coefficient of t^d z^{-3d} is (-1)^d / (d!)^3 and nothing else survives
  const auto p2 = load_preset("P2");
  const GradedSeries l = lhs_compact_series(p2, p2.cohomology().unit(), 9);
  CHECK(l.size() == 4);
  for (int d = 0; d <= 3; ++d) {
    const Rational f = factorial(d);
    CHECK(l.coefficient(Monomial({d}, {}, -3 * d)) == Rational(d % 2 ? -1 : 1) / (f * f * f));
  }
  CHECK(l.coefficient(Monomial({1}, {}, -3)) == -1);
  CHECK(l.constant_coefficient() == 1);

  const auto p1 = load_preset("P1");
  const GradedSeries l1 = lhs_compact_series(p1, p1.cohomology().unit(), 4);
  CHECK(l1.coefficient(Monomial({1}, {}, -2)) == 1);
  CHECK(evaluate_series(l1, 1.0, 0.0) == 1.0);
}

TEST_CASE("compact cycle: both sides agree exactly") {
  for (const char* name : {"P1", "P2", "P1xP1", "P3"}) {
    const auto p = load_preset(name);
    const int order = std::string(name) == "P3" ? 8 : 10;
    std::vector<std::pair<std::string, Class>> phis = {{"1", p.cohomology().unit()}, {"c1", p.c1}};
    for (int i = 0; i < p.m(); ++i) phis.push_back({"D" + std::to_string(i + 1), p.divisor_classes[i]});
    for (const auto& [label, phi] : phis) {
      CAPTURE(name);
      CAPTURE(label);
      CHECK(lhs_compact_series(p, phi, order) == rhs_compact_series(p, phi, order));
    }
  }
  const auto p2 = load_preset("P2");
  CHECK_THROWS_AS(lhs_compact_series(p2, p2.cohomology().point_class(), 6), UnsupportedError);
}

TEST_CASE("real cycle: P1 against the Bessel oracle") {
  const auto p1 = load_preset("P1");
  const Class one = p1.cohomology().unit();
  const Class h = p1.divisor_classes[0];
  for (double z : {1.0, 2.0})
    for (double t : {0.1, 0.2}) {
      CAPTURE(z);
      CAPTURE(t);
      const double ref = bessel_2k0(z, t);
      const RealIntegral l = lhs_real(p1, one, z, t, QuadConfig{});
      CHECK(std::abs(l.value - ref) / ref < 1e-9);
      CHECK_FALSE(l.flagged);
      const RhsValue r = rhs_gamma(p1, Sheaf::O_X, one, z, t, 12);
      CHECK(std::abs(r.value - ref) / ref < 1e-9);
      CHECK(r.tail < 1e-9);
      const double ref1 = bessel_2tk1(z, t);
      CHECK(std::abs(lhs_real(p1, h, z, t, QuadConfig{}).value - ref1) / ref1 < 1e-9);
      CHECK(std::abs(rhs_gamma(p1, Sheaf::O_X, h, z, t, 12).value - ref1) / ref1 < 1e-9);
    }
  CHECK(lhs_real(p1, one, 1, 0.1, QuadConfig{}).value == doctest::Approx(3.5054077110562917).epsilon(1e-10));
}

TEST_CASE("real cycle: P2 and P1xP1 cross-validation") {
  const auto p2 = load_preset("P2");
  const Class one = p2.cohomology().unit();
  const double l = lhs_real(p2, one, 1, 0.05, QuadConfig{}).value;
  const double r = rhs_gamma(p2, Sheaf::O_X, one, 1, 0.05, 12).value;
  CHECK(relative_error(l, r) < 1e-4);
  const auto pp = load_preset("P1xP1");
  // the product of two P1 integrals
  const double b = bessel_2k0(1, 0.1);
  CHECK(lhs_real(pp, pp.cohomology().unit(), 1, 0.1, QuadConfig{}).value == doctest::Approx(b * b).epsilon(1e-9));
  CHECK(rhs_gamma(pp, Sheaf::O_X, pp.cohomology().unit(), 1, 0.1, 12).value == doctest::Approx(b * b).epsilon(1e-9));
}

TEST_CASE("quadrature refinement stays within the reported estimate") {
  const auto p2 = load_preset("P2");
  const Class one = p2.cohomology().unit();
  QuadConfig coarse;
  coarse.panels = 200;
  QuadConfig fine = coarse;
  fine.panels = 400;
  const RealIntegral a = lhs_real(p2, one, 1, 0.05, coarse);
  const RealIntegral b = lhs_real(p2, one, 1, 0.05, fine);
  CHECK(a.error > 0);
  CHECK(std::abs(a.value - b.value) <= a.error);
}

TEST_CASE("quadrature is deterministic across thread counts") {
  const auto p2 = load_preset("P2");
  QuadConfig one_thread;
  one_thread.threads = 1;
  QuadConfig many = one_thread;
  many.threads = 5;
  const Class unit = p2.cohomology().unit();
  CHECK(lhs_real(p2, unit, 1, 0.05, one_thread).value == lhs_real(p2, unit, 1, 0.05, many).value);
}

TEST_CASE("divergence guards and unsupported requests") {
  const auto p1 = load_preset("P1");
  const Class one = p1.cohomology().unit();
  CHECK_THROWS_AS(lhs_real(p1, one, 1, 1e-7, QuadConfig{}), DomainError);
  CHECK_THROWS_AS(lhs_real(p1, one, 0, 0.1, QuadConfig{}), DomainError);
  const auto p3 = load_preset("P3");
  CHECK_THROWS_AS(lhs_real(p3, p3.cohomology().unit(), 1, 0.1, QuadConfig{}), UnsupportedError);
  CHECK_THROWS_AS(verify(p1, Cycle::compact, Sheaf::O_X, one, 1, 0.1, 8), UnsupportedError);
  CHECK_THROWS_AS(verify(p1, Cycle::real, Sheaf::O_pt, one, 1, 0.1, 8), UnsupportedError);
  CHECK_THROWS_AS(integrate_box([](const double*) { return 1.0; }, 1, QuadConfig{}), DomainError);
}

TEST_CASE("verification reports") {
  const auto p1 = load_preset("P1");
  const GammaReport c = verify(p1, Cycle::compact, Sheaf::O_pt, p1.cohomology().unit(), 1, 0.1, 8);
  REQUIRE(c.exact_match);
  CHECK(*c.exact_match);
  CHECK(c.rel_err == 0);
  CHECK(c.passed);

  VerifyOptions opt;
  opt.tolerance = 1e-6;
  const GammaReport r = verify(p1, Cycle::real, Sheaf::O_X, p1.cohomology().unit(), 2, 0.1, 12, opt);
  CHECK(r.rel_err < 1e-6);
  CHECK(std::abs(r.lhs - bessel_2k0(2, 0.1)) / r.lhs < 1e-6);
  CHECK(r.passed);

  opt.normalization = Normalization::two_pi_i;
  const auto p2 = load_preset("P2");
  const GammaReport n = verify(p2, Cycle::compact, Sheaf::O_pt, p2.cohomology().unit(), 1, 0.1, 6, opt);
  CHECK(n.phase == "-1");
  CHECK(n.rel_err == 0);
  CHECK(relative_error(1.0, 0.0) == doctest::Approx(1e30));
}
