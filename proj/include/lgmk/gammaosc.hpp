#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "lgmk/cohomology.hpp"
#include "lgmk/exactalg.hpp"
#include "lgmk/fanogeom.hpp"
#include "lgmk/quadrature.hpp"

namespace lgmk {

using Real = boost::multiprecision::cpp_bin_float_50;

/// Exact Bernoulli numbers B_0..B_n (B_1 = -1/2).
std::vector<Rational> bernoulli_numbers(int n);
/// zeta(k), k >= 2, by Euler-Maclaurin summation.
Real zeta(int k);
/// Euler's constant by the asymptotic expansion of the harmonic numbers.
Real euler_gamma();
/// Stored 55-digit reference values: gamma and zeta(2..10).
Real reference_euler_gamma();
Real reference_zeta(int k);

struct GammaClass {
  std::vector<Real> coeffs;  // in the ring basis
  int precision = 50;        // decimal digits
  int order = 0;             // top complex degree retained
  double coefficient(std::size_t basis_index) const { return coeffs.at(basis_index).convert_to<double>(); }
};

/// Gamma class from the toric divisors of the J-source: ch_k(TX) = sum_i D_i^k / k!.
GammaClass gamma_class(const ToricFanoPair& pair, int precision = 50);
GammaClass gamma_class(const CohomologyRing& ring, const std::vector<Class>& chern_root_divisors, int precision = 50);

/// Gamma on the complex plane (Lanczos, g = 7, n = 9); throws at the poles.
std::complex<double> lanczos_gamma(std::complex<double> z);
/// |Gamma(1-c)Gamma(1+c)(1-e^{-2 pi i c}) - 2 pi i c e^{-pi i c}|; integer c is a pole.
double reflection_check(std::complex<double> c);
/// Taylor coefficients of Gamma(1+x) at 0 up to x^k_max, from a Cauchy integral.
std::vector<double> gamma_taylor(int k_max);

enum class Sheaf { O_pt, O_X };
enum class Cycle { compact, real };
/// constant_term: the torus integral is (2 pi i)^{-n} times the contour integral
/// and Ch(O_pt) is the point class. two_pi_i scales both sides by (2 pi i)^n.
enum class Normalization { constant_term, two_pi_i };

const char* to_string(Sheaf s);
const char* to_string(Cycle c);
Sheaf parse_sheaf(const std::string& s);
Cycle parse_cycle(const std::string& s);

struct RhsValue {
  double value = 0;
  double tail = 0;  // magnitude of the highest-degree contribution
};

/// Numeric right-hand side at real z > 0 with all curve variables set to t^deg.
RhsValue rhs_gamma(const ToricFanoPair& pair, Sheaf sheaf, const Class& phi, const Class& tau02, double z, double t,
                   int truncation);
RhsValue rhs_gamma(const ToricFanoPair& pair, Sheaf sheaf, const Class& phi, double z, double t, int truncation);

/// Exact O_pt right-hand side: sum_beta t^beta H^0[(phi - z(phi.beta)) J_beta(-z)/(-z)],
/// as a series in the curve variables and z.
GradedSeries rhs_compact_series(const ToricFanoPair& pair, const Class& phi, int truncation);
/// Exact constant term of phi-check(-z) e^{-W/z} in chart 0, same variables.
GradedSeries lhs_compact_series(const ToricFanoPair& pair, const Class& phi, int truncation);
/// Sum of c t^{deg} z^e over the terms of a chart-free series.
double evaluate_series(const GradedSeries& f, double z, double t);

struct RealIntegral {
  double value = 0;
  double error = 0;
  bool flagged = false;
  QuadResult quad;
};

/// Quadrature of phi-check e^{-W/z} over the positive real locus (n <= 2).
RealIntegral lhs_real(const ToricFanoPair& pair, const Class& phi, double z, double t, const QuadConfig& quad,
                      int truncation = 0);

struct GammaReport {
  Cycle cycle = Cycle::compact;
  Sheaf sheaf = Sheaf::O_pt;
  std::string pair;
  std::string phi;
  double z = 0, t = 0;
  double lhs = 0, rhs = 0, abs_err = 0, rel_err = 0;
  int truncation = 0;
  std::string quad_digest;
  double quad_error = 0;
  bool quad_flagged = false;
  double rhs_tail = 0;
  std::optional<bool> exact_match;  // compact cycle only
  Normalization normalization = Normalization::constant_term;
  std::string phase;  // i^n when normalization is two_pi_i
  double tolerance = 0;
  bool passed = false;
};

/// Relative error with the floor 1e-30 on |rhs|.
double relative_error(double lhs, double rhs);

struct VerifyOptions {
  std::string phi_label = "1";
  QuadConfig quad;
  double tolerance = 1e-6;
  Normalization normalization = Normalization::constant_term;
};

GammaReport verify(const ToricFanoPair& pair, Cycle cycle, Sheaf sheaf, const Class& phi, double z, double t,
                   int truncation, const VerifyOptions& options = {});

/// "1", "c1", "D<i>" (1-based) or "H<k>" (basis index k, 0-based) to a class.
Class parse_phi(const ToricFanoPair& pair, const std::string& label);

}  // namespace lgmk
