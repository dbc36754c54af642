#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lgmk/cohomology.hpp"
#include "lgmk/exactalg.hpp"

namespace lgmk {

using IntVec = std::vector<int>;

/// Toric divisors of X used to build the small J-function.
struct ToricJSource {
  std::vector<Class> divisor_classes;       // k classes
  std::vector<IntVec> intersection;         // r rows, D_i . beta_j
};

/// Log Calabi-Yau pair (X, D). For kind == toric the boundary is the full toric
/// boundary; for kind == smooth_divisor D is a single smooth anticanonical divisor
/// and only intersection data is present.
struct ToricFanoPair {
  enum class Kind { toric, smooth_divisor };

  std::string name;
  Kind kind = Kind::toric;
  int n = 0;
  std::vector<IntVec> rays;
  std::vector<IntVec> max_cones;            // 0-based ray indices, sorted
  int r = 0;                                // number of NE(X) generators
  std::vector<IntVec> intersection;         // r rows of length m: D_i . beta_j
  IntVec anticanonical_degree;              // (-K_X) . beta_j
  std::shared_ptr<const CohomologyRing> ring;
  std::vector<Class> divisor_classes;       // m classes
  Class c1;
  std::optional<ToricJSource> toric_j;
  /// Supplied one-point invariants <pt psi^k>_beta.
  std::map<IntVec, std::map<int, Rational>> point_invariants;

  int m() const { return static_cast<int>(divisor_classes.size()); }
  const CohomologyRing& cohomology() const { return *ring; }

  int degree(const IntVec& beta) const;
  int intersection_number(int i, const IntVec& beta) const;
  /// (D_1 . beta, ..., D_m . beta)
  IntVec d_vector(const IntVec& beta) const;
  /// Every effective class of anticanonical degree <= n, ordered by degree.
  std::vector<IntVec> effective_classes(int max_degree) const;
  IntVec zero_class() const { return IntVec(r, 0); }

  /// Grading with one curve variable per NE generator and the given chart arity.
  Grading grading(int chart_vars, int truncation) const;

  /// True when the support of p lies in some maximal cone and p >= 0.
  bool in_B(const IntVec& p) const;
  /// Index of the first maximal cone containing the support of p, or -1.
  int cone_containing(const IntVec& p) const;

  /// beta_0 with D_i . beta_0 = 1 and D_j . beta_0 = 0 for j outside cone sigma and j != i.
  /// For i in the cone this is the zero class.
  const IntVec& chart_class(int i, int sigma) const;
  /// theta_p in chart sigma; p need not lie in B.
  Monomial chart_monomial_of(const IntVec& p, int sigma) const;

  /// Pairing of an H^2 class with beta, via phi = sum c_i D_i.
  Rational pairing(const Class& phi, const IntVec& beta) const;
  /// Coordinates c with phi = sum c_i D_i; throws UnsupportedError if phi is not in H^2.
  std::vector<Rational> divisor_coordinates(const Class& phi) const;

  std::vector<std::vector<IntVec>> chart_classes;  // [sigma][i]
};

struct SectorIndex {
  enum class Tag { identity, point };
  IntVec s;
  Tag tag = Tag::identity;
  auto operator<=>(const SectorIndex&) const = default;
};

/// D_s nonempty: the support of s lies in a maximal cone.
bool stratum_nonempty(const ToricFanoPair& pair, const IntVec& s);
int stratum_dimension(const ToricFanoPair& pair, const IntVec& s);
int deg0(const ToricFanoPair& pair, const SectorIndex& sector);

/// Parses and validates a geometry JSON document.
ToricFanoPair load_pair_json(const std::string& json_text);
ToricFanoPair load_pair_file(const std::string& path);
ToricFanoPair load_preset(const std::string& name);
/// Preset name or path to a JSON file.
ToricFanoPair load_pair(const std::string& preset_or_path);
std::vector<std::string> preset_names();
std::string preset_json(const std::string& name);

int intersection_number(const ToricFanoPair& pair, int i, const IntVec& beta);
/// Chart monomial of theta_p, p in B(Z), in maximal cone sigma.
Monomial chart_monomial(const ToricFanoPair& pair, const IntVec& p, int sigma);

}  // namespace lgmk
