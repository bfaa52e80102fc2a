#pragma once

#include <optional>
#include <vector>

#include "hilbert/algebra.hpp"
#include "hilbert/lattice.hpp"

namespace hilbert {

/// Contains the unit and is closed under detachment: x, x -> y in J gives y in J.
bool is_filter(const Algebra& a, ElementSet s);
/// Alternative test: nonempty, and x <= y -> z with x, y in J forces z in J.
bool is_filter_by_bounds(const Algebra& a, ElementSet s);
/// Alternative test: upward closed relative subsemilattice containing the unit.
bool is_semilattice_filter(const Algebra& a, ElementSet s);

/// Least filter including `generators` (the unit alone for the empty set).
ElementSet filter_generated(const Algebra& a, ElementSet generators);
/// [p), which coincides with the up-set of p.
inline ElementSet principal_filter(const Algebra& a, Element p) { return filter_generated(a, ElementSet::singleton(p)); }
ElementSet filter_join(const Algebra& a, ElementSet j, ElementSet k);

/// All filters ordered by inclusion.
///
/// `carrier` is sorted by (size, bit pattern), so {1} comes first and the
/// universe last; `lattice` indexes into `carrier`.
struct FilterLattice {
  std::vector<ElementSet> carrier;
  FiniteLattice lattice;
  int index_of(ElementSet j) const;
};

/// Breadth-first closure: generated filters of singletons, then joins until
/// nothing new appears.
FilterLattice all_filters(const Algebra& a);
/// Every subset tested with is_filter; sorted like FilterLattice::carrier.
std::vector<ElementSet> all_filters_brute_force(const Algebra& a);
/// Closure of the principal filters and {1} under filter join.
std::vector<ElementSet> finitely_generated_filters(const Algebra& a);

/// a/J = {b : b -> a in J and a -> b in J}.
ElementSet class_of(const Algebra& a, ElementSet j, Element x);
/// The partition of the universe by the congruence of J, ordered by least index.
std::vector<ElementSet> congruence_classes(const Algebra& a, ElementSet j);
/// J_a = {x : x -> a in J}.
ElementSet lower_set(const Algebra& a, ElementSet j, Element x);

/// Greatest element of the class of x, if any. Stays total on purpose:
/// nothing here assumes the class has a maximum.
std::optional<Element> monomial_max(const Algebra& a, ElementSet j, Element x);
bool is_monomial(const Algebra& a, ElementSet j);

/// Downward closed and closed under every existing binary join.
bool is_ideal(const Algebra& a, ElementSet s);
/// Closed under every translation x ↦ p -> x.
bool is_alpha_closed(const Algebra& a, ElementSet s);

}  // namespace hilbert
