#pragma once

#include <vector>

#include "hilbert/algebra.hpp"
#include "hilbert/endo_map.hpp"
#include "hilbert/lattice.hpp"
#include "hilbert/report.hpp"

namespace hilbert {

/// α_P = α_{p1} ∘ ... ∘ α_{pk}; ε for the empty set.
EndoMap alpha_set(const Algebra& a, ElementSet p);

/// CE^α = {α_p : p in A}, sorted and deduplicated.
std::vector<EndoMap> principal_ces(const Algebra& a);
/// CE^f: ε together with every finite composite of principal closure
/// endomorphisms, sorted. Built by closing CE^α under ∘, not by filtering CE.
std::vector<EndoMap> finitely_generated_ces(const Algebra& a);

/// minuend − subtrahend: the least χ in `carrier` with
/// minuend <= subtrahend ∘ χ. Throws InvariantViolation if the set of
/// such χ has no least element.
EndoMap difference(const Algebra& a, const std::vector<EndoMap>& carrier, const EndoMap& minuend,
                   const EndoMap& subtrahend);
/// Same, over CE^f.
EndoMap difference(const Algebra& a, const EndoMap& minuend, const EndoMap& subtrahend);

/// The adjoint semilattice (CE^f, ∘) with its subtraction table.
struct AdjointSemilattice {
  std::vector<EndoMap> carrier;
  std::vector<std::vector<int>> join;
  /// difference[i][j] indexes carrier[i] − carrier[j].
  std::vector<std::vector<int>> difference;
  /// Pointwise order on the carrier.
  Poset order;
  int bottom = -1;

  int size() const { return static_cast<int>(carrier.size()); }
  int index_of(const EndoMap& f) const;
};

AdjointSemilattice adjoint_semilattice(const Algebra& a);

/// Implicative semilattice on the finitely generated filters, ordered by
/// reverse inclusion, with A embedded by p ↦ [p).
struct BrouwerianExtension {
  std::vector<ElementSet> carrier;
  /// Meet is filter join.
  std::vector<std::vector<int>> meet;
  /// imp[i][j]: least filter H (by inclusion) with carrier[j] ⊆ carrier[i] ⊔ H.
  std::vector<std::vector<int>> imp;
  int top = -1;
  std::vector<int> embedding;

  int size() const { return static_cast<int>(carrier.size()); }
  /// The extension as a Hilbert algebra table over carrier indices.
  Algebra as_algebra() const;
};

/// Throws InvariantViolation if some implication has no unique least
/// candidate.
BrouwerianExtension minimal_brouwerian_extension(const Algebra& a);

/// Nonempty down-sets of the adjoint semilattice closed under its joins,
/// as sets of carrier indices, ordered by inclusion.
struct IdealLattice {
  std::vector<ElementSet> ideals;
  FiniteLattice lattice;
};
IdealLattice ideal_lattice_of_adjoint(const Algebra& a);

/// φ is the composite of α_p over p in K_φ, and (implication algebras)
/// the pointwise meet of δ_p over p in F_φ.
VerificationReport check_join_density(const Algebra& a);
/// κ restricted to CE^f is a join-semilattice isomorphism onto the finitely
/// generated filters; p ↦ α_p is order-reversing onto CE^α; subtraction
/// obeys the α-law and residuation.
VerificationReport check_kk2(const Algebra& a);
/// Compact elements of CE are exactly CE^f and every element is a join of
/// compact ones; the same for the filter lattice and finitely generated filters.
VerificationReport check_compact_generation(const Algebra& a);
/// The extension is an implicative semilattice into which A embeds, every
/// element is a finite meet of embedded ones, and it is anti-isomorphic to
/// the adjoint semilattice.
VerificationReport check_brouwerian(const Algebra& a);
/// Ideal lattice of the adjoint semilattice is isomorphic to the filter lattice.
VerificationReport check_filter_ideal_bridge(const Algebra& a);
/// Implication algebras only (PreconditionError otherwise): CE^f is a
/// down-set of CE and φ <= α_P gives φ = α_Q with Q = {φp -> p : p in P}.
VerificationReport check_impla3(const Algebra& a);

}  // namespace hilbert
