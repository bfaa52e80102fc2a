#pragma once

#include "hilbert/algebra.hpp"

namespace fixtures {

using hilbert::Algebra;

// 0 < 1
inline Algebra two_chain() { return hilbert::make_algebra({{1, 1}, {0, 1}}, 1); }

inline Algebra singleton() { return hilbert::make_algebra({{0}}, 0); }

// Goedel chain 0 < a < 1: x -> y is 1 when x <= y, else y.
inline Algebra a3c() {
  return hilbert::make_algebra({{2, 2, 2}, {0, 2, 2}, {0, 1, 2}}, 2).with_labels({"0", "a", "1"});
}

// Atoms a, b under 1: a -> b = b, b -> a = a.
inline Algebra a3i() {
  return hilbert::make_algebra({{2, 1, 2}, {0, 2, 2}, {0, 1, 2}}, 2).with_labels({"a", "b", "1"});
}

// Four-element Boolean algebra 0, a, b, 1 with x -> y = -x v y.
inline Algebra boolean4() {
  return hilbert::make_algebra({{3, 3, 3, 3}, {2, 3, 2, 3}, {1, 1, 3, 3}, {0, 1, 2, 3}}, 3)
      .with_labels({"0", "a", "b", "1"});
}

}  // namespace fixtures
