#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lgmk/cohomology.hpp"
#include "lgmk/exactalg.hpp"
#include "lgmk/fanogeom.hpp"
#include "lgmk/gwabs.hpp"

namespace lgmk {

/// Extension data: vectors a_i in Z^m_{>=0} with formal variables x_{a_i}, plus an
/// optional mid-age symbol b attached to a maximal cone.
struct ExtendedData {
  std::vector<IntVec> vectors;
  std::optional<int> midage_cone;
  int max_extension_order = 0;  // bound on sum l_i (the mid-age counts separately)
};

struct IFunctionKey {
  IntVec beta;
  IntVec l;
  int midage = 0;  // exponent of x_b, 0 or 1
  int z = 0;
  SectorIndex sector;  // with a mid-age, s is the residual vector next to b
  auto operator<=>(const IFunctionKey&) const = default;
};

struct RelativeIFunction {
  int truncation = 0;
  ExtendedData data;
  std::map<IFunctionKey, Rational> coefficients;
  /// One line per dropped (beta, l) whose sector has an empty stratum.
  std::vector<std::string> diagnostics;
};

/// Unprojected class-valued term for (beta, l, b): J_beta times the hypergeometric
/// and extension factors of the relative I-function, before restriction to D_s.
ClassLaurent hypergeometric_factor(const ToricFanoPair& pair, const JFunction& j, const IntVec& beta,
                                   const ExtendedData& data, const IntVec& l, int midage);

/// Sector s = -D.beta + sum l_i a_i.
IntVec i_function_sector(const ToricFanoPair& pair, const IntVec& beta, const ExtendedData& data, const IntVec& l);

RelativeIFunction relative_i_function(const ToricFanoPair& pair, const ExtendedData& data, int truncation);

struct MirrorMap {
  /// Sector -> correction series (curve variables, chart variables = extension
  /// variables). beta = 0, l = 0 contributes only the symbolic skeleton.
  std::map<IntVec, GradedSeries> entries;
  bool is_trivial = true;
  std::string skeleton = "tau02 + sum_i p_i log Q_i + sum_i D_i log q_i";
  std::vector<std::string> diagnostics;
};

MirrorMap mirror_map(const ToricFanoPair& pair, int truncation);
MirrorMap extended_mirror_map(const ToricFanoPair& pair, const ExtendedData& data, int truncation);

/// Sum of all non-skeleton mirror-map entries.
GradedSeries mirror_correction(const ToricFanoPair& pair, const MirrorMap& map, int truncation);

/// #{i : D_i . beta > 0} >= 2 for every nonzero beta up to the truncation.
bool triviality_criterion(const ToricFanoPair& pair, int truncation);

/// g(Q) = sum_{D.beta >= 2} <pt psi^{D.beta-2}> (D.beta-1)! Q^beta.
GradedSeries proper_potential_generator(const ToricFanoPair& pair, int truncation);

struct ProperPotential {
  GradedSeries g;          // in Q
  GradedSeries mirror;     // y = Q exp((D.beta) g(Q))
  GradedSeries inverse;    // Q(y)
  GradedSeries potential;  // W(t, x) = x exp(g(Q(t x^{-D.beta})))
};

/// Proper Landau-Ginzburg potential of a smooth anticanonical divisor, Picard rank 1.
ProperPotential proper_potential(const ToricFanoPair& pair, int truncation);

struct InvariantSpec {
  std::vector<IntVec> contact;         // [1]_p insertions
  std::vector<Class> classes;          // untwisted insertions: 1 or H^2 classes
  std::optional<int> midage_cone;      // adds the pair [1]_b, [pt]_{-b+k}
  IntVec output;                       // s of [pt]_s, or k of [pt]_{-b+k}
  int psi = 0;                         // descendant power on the output marking
  IntVec beta;
  enum class Route { automatic, theta, structure, i_function } route = Route::automatic;
};

/// Relative invariant determined by the Fano-case mirror theorem.
Rational extract_invariant(const ToricFanoPair& pair, const InvariantSpec& spec);

}  // namespace lgmk
