#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hilbert/algebra.hpp"

namespace hilbert {

struct EnumerationOptions {
  /// Keep one representative per isomorphism class. When false, every valid
  /// table whose unit is the last index is returned.
  bool deduplicate = true;
  int bound = 6;
  int jobs = 1;
};

struct CatalogEntry {
  std::string name;
  Algebra algebra;
  int filters = 0;
  int multipliers = 0;
  int closure_endomorphisms = 0;
  Classification flags;
};

/// Representatives sorted by canonical table, named A{n}_{k} from 1.
struct AlgebraCatalog {
  int size = 0;
  std::vector<CatalogEntry> entries;
};

/// Rough number of search nodes for size n, used in refusals.
double estimated_search_cost(int n);

/// Throws BoundExceeded when n > options.bound and PreconditionError when n < 1.
AlgebraCatalog enumerate_algebras(int n, const EnumerationOptions& options = {});
/// The raw tables behind enumerate_algebras, unit at index n-1, in search order.
std::vector<Algebra> enumerate_tables(int n, const EnumerationOptions& options = {});

/// Lexicographically least table over all unit-fixing relabellings, with the
/// unit moved to n-1. perm[x] is the new index of x.
struct CanonicalForm {
  std::vector<Element> table;
  std::vector<int> perm;
};
CanonicalForm canonical_form(const Algebra& a);

/// h with h(x -> y) = h(x) -> h(y), as images of A's elements.
std::optional<std::vector<int>> are_isomorphic(const Algebra& a, const Algebra& b);
int automorphism_count(const Algebra& a);

/// Same table under the relabelling x ↦ perm[x]; labels travel along.
Algebra relabel(const Algebra& a, const std::vector<int>& perm);

}  // namespace hilbert
