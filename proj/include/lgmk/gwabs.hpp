#pragma once

#include <map>
#include <memory>
#include <vector>

#include "lgmk/cohomology.hpp"
#include "lgmk/exactalg.hpp"
#include "lgmk/fanogeom.hpp"

namespace lgmk {

/// Small J-function with the tau_{0,2} Novikov weights e^{tau.beta} factored out:
/// J = e^{tau/z} sum_beta e^{tau.beta} t^beta J_beta, J_0 = z + tau.
struct JFunction {
  std::shared_ptr<const CohomologyRing> ring;
  int truncation = 0;
  Class tau02;
  /// True when built from supplied point invariants: only the H^0 channel is known.
  bool point_channel_only = false;
  std::map<IntVec, ClassLaurent> terms;

  /// J_beta / z for beta != 0; the unit for beta == 0.
  ClassLaurent hypergeometric(const IntVec& beta) const;
};

JFunction j_function(const ToricFanoPair& pair, int truncation);
JFunction j_function(const ToricFanoPair& pair, const Class& tau02, int truncation);

/// <pt psi^k>_{0,1,beta}.
Rational point_invariant(const JFunction& j, const IntVec& beta, int k);

/// sum_beta <pt psi^{-K.beta-2}> t^beta, one curve variable per NE generator.
GradedSeries quantum_period(const ToricFanoPair& pair, int truncation);
/// Same with the t^beta coefficient multiplied by (-K.beta)!.
GradedSeries regularized_quantum_period(const ToricFanoPair& pair, int truncation);

/// Sums coefficients of equal anticanonical degree (all t_j set to t).
/// Requires a series without chart or z exponents.
std::vector<Rational> coefficients_by_degree(const GradedSeries& f);

}  // namespace lgmk
