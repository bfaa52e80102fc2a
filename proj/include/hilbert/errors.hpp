#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "hilbert/element_set.hpp"

namespace hilbert {

/// Raw input that cannot even be read as a table (bad shape, entry out of range).
class MalformedInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its documented domain.
///
/// `witness` holds the offending elements: one element for a class or
/// up-set without an extremum, a pair (a, b) for a specialness failure.
class DomainError : public std::runtime_error {
 public:
  DomainError(const std::string& what, std::vector<Element> witness)
      : std::runtime_error(what), witness_(std::move(witness)) {}
  const std::vector<Element>& witness() const { return witness_; }

 private:
  std::vector<Element> witness_;
};

/// Caller-side precondition, e.g. an implication-algebra-only routine
/// applied to an arbitrary Hilbert algebra.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A structural fact the construction relies on did not hold. Seeing one
/// of these means either a bug or a counterexample.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Enumeration request beyond the configured size bound.
class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hilbert
