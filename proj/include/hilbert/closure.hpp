#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hilbert/algebra.hpp"
#include "hilbert/endo_map.hpp"
#include "hilbert/lattice.hpp"
#include "hilbert/report.hpp"

namespace hilbert {

/// Endomorphism that is also a closure operator (extensive, isotone,
/// idempotent). The endomorphism law is φ(x -> y) = φx -> φy.
bool is_closure_endomorphism(const Algebra& a, const EndoMap& f);

// The individual identities and conditions that characterize closure
// endomorphisms in several equivalent ways.

/// φx -> φy = x -> φy
bool satisfies_closure_identity(const Algebra& a, const EndoMap& f);
/// x <= y -> z implies φx <= φy -> φz
bool transfers_bounds(const Algebra& a, const EndoMap& f);
/// Every φx equals p -> x for some p (depending on x).
bool is_locally_principal(const Algebra& a, const EndoMap& f);
/// Compatible pairs go to compatible pairs and φ(x ⋏ y) = φx ⋏ φy.
bool preserves_compatible_meets(const Algebra& a, const EndoMap& f);

ElementSet kernel(const Algebra& a, const EndoMap& f);
ElementSet fixpoints(const Algebra& a, const EndoMap& f);

/// Isotone multipliers, sorted lexicographically.
std::vector<EndoMap> closure_endomorphisms(const Algebra& a);
/// a ↦ max(a/J) over every monomial filter J, sorted. Independent second
/// route to the same set.
std::vector<EndoMap> closure_endomorphisms_via_filters(const Algebra& a);

/// The lattice (CE, ∘, ∧, ε, ι). join/meet index into `carrier`, and
/// `lattice` is the pointwise order.
struct CeLattice {
  std::vector<EndoMap> carrier;
  std::vector<std::vector<int>> join;
  std::vector<std::vector<int>> meet;
  int eps = -1;
  int iota = -1;
  FiniteLattice lattice;

  int size() const { return static_cast<int>(carrier.size()); }
  int index_of(const EndoMap& f) const;
};

/// Throws InvariantViolation unless CE is closed under ∘ and pointwise ∧,
/// these are the join and meet of the pointwise order, and the lattice is
/// distributive.
CeLattice all_ce(const Algebra& a);

/// a ↦ max(a/J). Throws DomainError when J is not a filter (empty witness)
/// or when some class has no greatest element (witness: that element).
EndoMap ce_from_monomial_filter(const Algebra& a, ElementSet j);

/// For every a and b in S there is p with p -> a in S and p -> b == b.
bool is_special(const Algebra& a, ElementSet s);
/// First (a, b) for which no such p exists.
std::optional<std::pair<Element, Element>> specialness_violation(const Algebra& a, ElementSet s);
/// Every up-set [a)_R = {r in R : a <= r} has a least element.
bool is_closure_retract(const Algebra& a, ElementSet r);
/// [a)_S
ElementSet upset_in(const Algebra& a, ElementSet s, Element x);
/// S^a = {x -> a : x in A} ∩ S
ElementSet translates_in(const Algebra& a, ElementSet s, Element x);

/// a ↦ min [a)_R. Throws DomainError when R is not special (witness a, b)
/// or not a closure retract (witness a).
EndoMap ce_from_retract(const Algebra& a, ElementSet r);

/// S ∇ T: every compatible meet x ⋏ y with x in S, y in T. Incompatible
/// cross pairs contribute nothing.
ElementSet nabla(const Algebra& a, ElementSet s, ElementSet t);

/// CE closure, lattice laws, the two construction routes, the equivalent
/// characterizations over every self-map, and the conditions every closure
/// endomorphism satisfies.
VerificationReport check_ce_structure(const Algebra& a);
/// For every multiplier: isotone iff kernel is a filter iff fixpoints special.
VerificationReport check_isotmult2(const Algebra& a);
/// For every endomorphism φ: φ is a closure operator iff τ ∘ φ is idempotent
/// for every idempotent endomorphism τ.
VerificationReport check_idempotent_lemma(const Algebra& a);
/// φ ↦ K_φ: lattice embedding into filters whose range is the monomial
/// filters, with φa = max a/K_φ.
VerificationReport check_kappa(const Algebra& a);
/// Inverts κ on each candidate set. Non-monomial candidates are reported
/// as skipped with the DomainError message instead of failing.
CheckResult check_monomial_roundtrip(const Algebra& a, std::span<const ElementSet> candidates);
/// φ ↦ F_φ: dual order embedding onto the special closure retracts, with
/// the ∇ formula and the dual-lattice correspondence to monomial filters.
VerificationReport check_ff(const Algebra& a);
/// Implication-algebra refinements. Throws PreconditionError otherwise.
VerificationReport implication_extras(const Algebra& a);
/// A is an implication algebra iff all fixpoint sets of CE are filters iff
/// the same for CE^f iff the same for CE^α.
VerificationReport check_fixpoint_filter_characterization(const Algebra& a);

}  // namespace hilbert
