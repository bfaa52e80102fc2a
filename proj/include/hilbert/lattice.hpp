#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace hilbert {

/// A finite poset on indices 0..n-1 with an explicit order matrix.
struct Poset {
  int n = 0;
  std::vector<std::vector<bool>> leq;

  static Poset from_relation(int n, const std::function<bool(int, int)>& le);
  bool is_partial_order() const;
  /// Pairs (lower, upper) with lower < upper and nothing strictly between.
  std::vector<std::pair<int, int>> covers() const;
  Poset dual() const;
};

/// A finite lattice: a poset plus materialized join/meet tables.
///
/// Used uniformly for filter lattices, the closure endomorphism lattice and
/// ideal lattices.
class FiniteLattice {
 public:
  /// Throws InvariantViolation when the order is not a lattice.
  static FiniteLattice from_order(Poset order);

  int size() const { return order_.n; }
  bool leq(int x, int y) const { return order_.leq[x][y]; }
  int join(int x, int y) const { return join_[x][y]; }
  int meet(int x, int y) const { return meet_[x][y]; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }
  const Poset& order() const { return order_; }

  bool is_distributive() const;
  /// Complement of x when it exists and is unique.
  std::optional<int> complement(int x) const;
  bool is_boolean() const;
  FiniteLattice dual() const;

 private:
  Poset order_;
  std::vector<std::vector<int>> join_;
  std::vector<std::vector<int>> meet_;
  int bottom_ = 0;
  int top_ = 0;
};

/// Order isomorphism a -> b (image of each element of a), if one exists.
///
/// Elements are first coloured by iterated refinement over the Hasse
/// digraph (up/down-set sizes and cover neighbourhoods); a backtracking
/// search then matches colour classes.
std::optional<std::vector<int>> order_isomorphism(const Poset& a, const Poset& b);

inline bool isomorphic(const FiniteLattice& a, const FiniteLattice& b) {
  return a.size() == b.size() && order_isomorphism(a.order(), b.order()).has_value();
}

/// Compact elements of a finite lattice.
///
/// c is compact when every X with c <= join(X) has a finite subset whose
/// join is already above c. Every subset of a finite lattice is finite and
/// serves as its own witness, so this is the whole carrier.
std::vector<int> compact_elements(const FiniteLattice& l);

}  // namespace hilbert
