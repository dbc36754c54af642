#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lgmk/exactalg.hpp"
#include "lgmk/fanogeom.hpp"

namespace lgmk {

/// Element of the mirror algebra in the theta basis: lattice point -> S_I coefficient.
struct ThetaElement {
  Grading grading;  // curve variables only
  std::map<IntVec, GradedSeries> coeffs;

  static ThetaElement theta(const ToricFanoPair& pair, const IntVec& p, int truncation);
  GradedSeries coefficient(const IntVec& p) const;
  bool operator==(const ThetaElement& other) const;
  std::string to_string() const;
};

/// Unique (r, beta') with u = r + D.beta', r in B(Z), beta' effective.
/// Throws InconsistencyError when more than one decomposition exists.
std::pair<IntVec, IntVec> decompose(const ToricFanoPair& pair, const IntVec& u);

ThetaElement theta_product(const ToricFanoPair& pair, const IntVec& p1, const IntVec& p2, int truncation);
ThetaElement multiply(const ToricFanoPair& pair, const ThetaElement& a, const ThetaElement& b);
/// Product computed as chart monomials in cone sigma and matched back to theta_r t^beta.
ThetaElement theta_product_in_chart(const ToricFanoPair& pair, const IntVec& p1, const IntVec& p2, int sigma,
                                    int truncation);

/// theta_0 coefficient of theta_{p_1} * ... * theta_{p_l}.
GradedSeries frobenius_constant(const ToricFanoPair& pair, const std::vector<IntVec>& points, int truncation);

struct LGPotential {
  std::vector<IntVec> cones;
  std::vector<GradedSeries> charts;  // chart variables ordered as in the cone
  /// Variable names per chart, x<i+1> for divisor i.
  std::vector<std::vector<std::string>> chart_names;
  std::string theta_expression;      // "theta_e1 + theta_e2 + ..."
  std::string to_string(std::size_t sigma = 0) const;
};

LGPotential potential(const ToricFanoPair& pair, int truncation);

/// Laurent monomial of theta_p in cone sigma as a series (coefficient 1).
GradedSeries chart_series(const ToricFanoPair& pair, const IntVec& p, int sigma, int truncation);

/// Rewrites a chart-sigma series in chart tau via x_j -> chart monomial of e_j in tau.
/// Curve exponents may transiently go negative; the result must be effective.
GradedSeries change_chart(const ToricFanoPair& pair, const GradedSeries& f, int sigma, int tau);

/// sum_d constant_term(W^d); result has no chart variables.
GradedSeries classical_period(const GradedSeries& chart_potential);

/// Drops chart variables from a series that has none with nonzero exponent.
GradedSeries strip_chart(const GradedSeries& f);

/// phi-check in chart sigma: 1 for phi = 1, the divisor-equation derivative
/// sum_i (phi . beta_0(i, sigma)) theta_{e_i} for phi in H^2.
GradedSeries phi_function(const ToricFanoPair& pair, const Class& phi, int sigma, int truncation);

/// Theta function with quantum corrections for snc boundaries. The corrections
/// are not computed here: the uncorrected theta is returned and `hook`, when
/// given, is applied to it.
GradedSeries corrected_theta(const ToricFanoPair& pair, const IntVec& p, int sigma, int truncation,
                             const std::function<GradedSeries(const GradedSeries&)>& hook = {});

struct Recurrence {
  bool found = false;
  int order = 0;
  int degree = 0;
  /// coeffs[k] are the ascending coefficients of P_k(d) in sum_k P_k(d) a_{d-k} = 0.
  std::vector<std::vector<Integer>> coeffs;
  int fitted_terms = 0;
  int held_out = 0;
  std::string to_string() const;
};

/// Minimal (order, degree) integer recurrence annihilating the sequence, with
/// the last `held_out` terms reserved for validation.
Recurrence qde_recurrence(const std::vector<Rational>& a, int max_order = 4, int max_degree = 4, int held_out = 5);

/// Coefficients of a univariate period in u = t^g, g the gcd of the support degrees.
struct PeriodSequence {
  int step = 1;
  std::vector<Rational> a;
};
PeriodSequence period_sequence(const GradedSeries& period);

}  // namespace lgmk
