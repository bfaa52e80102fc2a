#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hilbert/element_set.hpp"

namespace hilbert {

/// One failed axiom instance, e.g. {"exchange", {1, 1, 0}}.
struct AxiomViolation {
  std::string axiom;
  std::vector<Element> instance;
  bool operator==(const AxiomViolation&) const = default;
};

struct ValidationResult;
ValidationResult validate_hilbert(int n, Element one, std::span<const Element> flat);

/// A validated finite Hilbert algebra given by its implication table.
///
/// Elements are dense indices 0..n-1 and the unit is an explicit index, not
/// necessarily n-1. The natural order is x <= y iff x -> y == one.
/// Instances only come out of validate_hilbert / make_algebra, so every
/// Algebra satisfies the axioms.
class Algebra {
 public:
  int size() const { return n_; }
  Element one() const { return one_; }
  Element imp(Element x, Element y) const { return table_[static_cast<std::size_t>(x * n_ + y)]; }
  bool leq(Element x, Element y) const { return imp(x, y) == one_; }

  ElementSet universe() const { return ElementSet::universe(n_); }
  ElementSet up(Element x) const { return up_[static_cast<std::size_t>(x)]; }
  ElementSet down(Element x) const { return down_[static_cast<std::size_t>(x)]; }

  /// Row-major table, table()[x*n + y] == x -> y.
  const std::vector<Element>& table() const { return table_; }
  std::vector<std::vector<Element>> rows() const;

  const std::string& label(Element x) const { return labels_[static_cast<std::size_t>(x)]; }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Copy with display labels replaced; labels must be unique and n in number.
  Algebra with_labels(std::vector<std::string> labels) const;

  /// Structural equality: same size, unit and table. Labels are ignored.
  friend bool operator==(const Algebra& a, const Algebra& b) {
    return a.n_ == b.n_ && a.one_ == b.one_ && a.table_ == b.table_;
  }

 private:
  friend ValidationResult validate_hilbert(int n, Element one, std::span<const Element> flat);
  Algebra(int n, Element one, std::vector<Element> table);

  int n_;
  Element one_;
  std::vector<Element> table_;
  std::vector<ElementSet> up_;
  std::vector<ElementSet> down_;
  std::vector<std::string> labels_;
};

struct ValidationResult {
  std::optional<Algebra> algebra;
  std::vector<AxiomViolation> violations;
  bool valid() const { return algebra.has_value(); }
};

/// Checks every axiom instance and reports all failures.
///
/// Axiom families: the relation x -> y == one must be a partial order with
/// greatest element `one` (order-reflexive, order-antisymmetric,
/// order-transitive, order-top); weakening x <= y -> x; and exchange
/// x -> (y -> z) <= (x -> y) -> (x -> z).
///
/// The first axiom is read as "x -> y = 1 iff x <= y"; the variant that
/// reads "x <= 1" on the right is vacuous and is not used.
///
/// Throws MalformedInput for ragged tables or out-of-range entries.
ValidationResult validate_hilbert(int n, Element one, std::span<const Element> flat);
ValidationResult validate_hilbert(const std::vector<std::vector<Element>>& rows, Element one);

class InvalidAlgebra : public std::runtime_error {
 public:
  explicit InvalidAlgebra(std::vector<AxiomViolation> violations);
  const std::vector<AxiomViolation>& violations() const { return violations_; }

 private:
  std::vector<AxiomViolation> violations_;
};

/// validate_hilbert, throwing InvalidAlgebra on any violation.
Algebra make_algebra(const std::vector<std::vector<Element>>& rows, Element one);
Algebra make_algebra(int n, Element one, std::span<const Element> flat);

/// The natural order as an explicit relation matrix.
struct OrderRelation {
  int n = 0;
  std::vector<std::vector<bool>> leq;
  bool is_partial_order() const;
  std::optional<Element> greatest() const;
};

OrderRelation natural_order(const Algebra& a);

/// Greatest / least element of a subset under the natural order, if any.
std::optional<Element> maximum(const Algebra& a, ElementSet s);
std::optional<Element> minimum(const Algebra& a, ElementSet s);

std::optional<Element> partial_meet(const Algebra& a, Element x, Element y);
std::optional<Element> partial_join(const Algebra& a, Element x, Element y);

/// x C y: some lower bound c of {x, y} has x <= y -> c.
bool is_compatible(const Algebra& a, Element x, Element y);
/// The lower bound witnessing compatibility; always the meet of x and y.
std::optional<Element> compatible_meet(const Algebra& a, Element x, Element y);

bool is_subalgebra(const Algebra& a, ElementSet s);
bool is_relative_subsemilattice(const Algebra& a, ElementSet s);
/// Least subalgebra containing `s` (and hence the unit).
ElementSet subalgebra_generated(const Algebra& a, ElementSet s);
/// Every subalgebra, sorted by bit pattern.
std::vector<ElementSet> all_subalgebras(const Algebra& a);

/// {x -> p : x in X}.
ElementSet block_from(const Algebra& a, ElementSet subalgebra, Element p);
/// Subalgebra that is a bounded implication algebra in its own right.
bool is_block(const Algebra& a, ElementSet b);

struct Classification {
  bool implication_algebra = false;
  bool implicative_semilattice = false;
};
Classification classify(const Algebra& a);

/// Text used in witnesses, e.g. "{a,1}".
std::string format_set(const Algebra& a, ElementSet s);

}  // namespace hilbert
