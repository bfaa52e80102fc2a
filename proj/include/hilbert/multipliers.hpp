#pragma once

#include <vector>

#include "hilbert/algebra.hpp"
#include "hilbert/endo_map.hpp"
#include "hilbert/report.hpp"

namespace hilbert {

/// f(x -> y) == x -> f(y) for all x, y.
bool is_multiplier(const Algebra& a, const EndoMap& f);

EndoMap eps(const Algebra& a);
EndoMap iota(const Algebra& a);
/// x ↦ p -> x
EndoMap alpha(const Algebra& a, Element p);
/// x ↦ (x -> p) -> x
EndoMap beta(const Algebra& a, Element p);
/// x ↦ (p -> x) -> x
EndoMap delta(const Algebra& a, Element p);

/// x ↦ f(x) -> g(x)
EndoMap pointwise_imp(const Algebra& a, const EndoMap& f, const EndoMap& g);
/// x ↦ f(x) ∧ g(x). Throws InvariantViolation if some pair has no meet;
/// images of two multipliers are always compatible, so for multipliers
/// this never fires.
EndoMap pointwise_meet(const Algebra& a, const EndoMap& f, const EndoMap& g);
/// x ↦ f(x) ∨ g(x), throwing InvariantViolation if a join is missing.
EndoMap pointwise_join(const Algebra& a, const EndoMap& f, const EndoMap& g);

/// Every multiplier, sorted lexicographically by image vector.
///
/// Backtracking over images with forward propagation: once f(y) is fixed,
/// f(x -> y) is forced to x -> f(y) for every x.
std::vector<EndoMap> multipliers(const Algebra& a);
/// Filter over all n^n maps. Test oracle.
std::vector<EndoMap> multipliers_brute_force(const Algebra& a);

/// The multipliers with their composition, pointwise implication and
/// pointwise meet tables (indices into `carrier`).
struct MultiplierAlgebra {
  std::vector<EndoMap> carrier;
  std::vector<std::vector<int>> imp;
  std::vector<std::vector<int>> compose;
  std::vector<std::vector<int>> meet;
  /// complement[i] indexes -φ = φ -> ε.
  std::vector<int> complement;
  int eps = -1;
  int iota = -1;

  int size() const { return static_cast<int>(carrier.size()); }
  int index_of(const EndoMap& f) const;
};

/// Builds the tables and asserts the structure laws: closure under ∘, ->
/// and ∧; ε least and ι greatest; (M, ->, ι) a bounded implication algebra;
/// (M, ∘, ∧) a Boolean lattice with complement φ -> ε, and φ <= ψ iff
/// φ ∘ ψ == ψ. Throws InvariantViolation when any of these fails.
MultiplierAlgebra all_multipliers(const Algebra& a);

/// {φ(x) : φ multiplier}.
ElementSet multiplier_block(const Algebra& a, Element x);

/// The nine identities (a)-(i) of the multiplier calculus for every pair of
/// multipliers and every element. One check per identity.
VerificationReport check_multiplier_calculus(const Algebra& a);

/// Structure of M and its blocks: propagating and brute-force enumeration
/// agree, the named families are multipliers, fixpoints equal ranges and
/// are subalgebras, K ∩ F = {1}, the structure laws of all_multipliers,
/// and every M(x) is a block of pairwise compatible elements.
VerificationReport check_multiplier_structure(const Algebra& a);

}  // namespace hilbert
