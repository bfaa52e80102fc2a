#pragma once

#include <optional>
#include <vector>

#include "hilbert/algebra.hpp"
#include "hilbert/endo_map.hpp"

namespace hilbert {

/// All maps with f(x -> y) == f(x) -> f(y), sorted. Backtracking with
/// propagation: whenever f(x) and f(y) are both known, f(x -> y) is forced.
std::vector<EndoMap> endomorphisms(const Algebra& a);
/// n^n filter. Test oracle.
std::vector<EndoMap> endomorphisms_brute_force(const Algebra& a);

/// The endomorphism monoid under composition.
struct EndoMonoid {
  std::vector<EndoMap> carrier;
  /// compose[i][j] indexes carrier[i] ∘ carrier[j].
  std::vector<std::vector<int>> compose;
  int identity = -1;

  int size() const { return static_cast<int>(carrier.size()); }
  int index_of(const EndoMap& f) const;
};

/// Throws InvariantViolation if the carrier is not closed under ∘ or lacks
/// the identity.
EndoMonoid endomorphism_monoid(const Algebra& a);

/// Bijection h with h(f ∘ g) == h(f) ∘ h(g), as images of indices of `m1`.
std::optional<std::vector<int>> monoid_isomorphism(const EndoMonoid& m1, const EndoMonoid& m2);
inline bool monoid_isomorphic(const EndoMonoid& m1, const EndoMonoid& m2) {
  return monoid_isomorphism(m1, m2).has_value();
}

/// Elements φ such that τ ∘ φ is idempotent for every idempotent τ. Uses
/// only the composition table, so monoid isomorphisms preserve it.
std::vector<int> idempotent_stable_elements(const EndoMonoid& m);

}  // namespace hilbert
