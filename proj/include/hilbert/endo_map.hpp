#pragma once

#include <compare>
#include <string>
#include <vector>

#include "hilbert/algebra.hpp"

namespace hilbert {

/// A total self-map of the universe, stored as its image vector.
class EndoMap {
 public:
  EndoMap() = default;
  explicit EndoMap(std::vector<Element> images) : img_(std::move(images)) {}

  static EndoMap identity(int n) {
    std::vector<Element> img(static_cast<std::size_t>(n));
    for (Element x = 0; x < n; ++x) img[x] = x;
    return EndoMap(std::move(img));
  }
  static EndoMap constant(int n, Element c) { return EndoMap(std::vector<Element>(static_cast<std::size_t>(n), c)); }

  int size() const { return static_cast<int>(img_.size()); }
  Element operator()(Element x) const { return img_[static_cast<std::size_t>(x)]; }
  const std::vector<Element>& images() const { return img_; }

  ElementSet range() const {
    ElementSet r;
    for (Element y : img_) r.insert(y);
    return r;
  }

  friend auto operator<=>(const EndoMap&, const EndoMap&) = default;
  friend bool operator==(const EndoMap&, const EndoMap&) = default;

 private:
  std::vector<Element> img_;
};

/// outer ∘ inner, i.e. x ↦ outer(inner(x)).
inline EndoMap compose(const EndoMap& outer, const EndoMap& inner) {
  std::vector<Element> img(inner.images().size());
  for (Element x = 0; x < inner.size(); ++x) img[x] = outer(inner(x));
  return EndoMap(std::move(img));
}

inline bool is_idempotent(const EndoMap& f) { return compose(f, f) == f; }

inline bool pointwise_leq(const Algebra& a, const EndoMap& f, const EndoMap& g) {
  for (Element x = 0; x < a.size(); ++x)
    if (!a.leq(f(x), g(x))) return false;
  return true;
}

inline bool is_isotone(const Algebra& a, const EndoMap& f) {
  for (Element x = 0; x < a.size(); ++x)
    for (Element y : a.up(x))
      if (!a.leq(f(x), f(y))) return false;
  return true;
}

/// f(x -> y) == f(x) -> f(y) for all x, y.
inline bool is_endomorphism(const Algebra& a, const EndoMap& f) {
  for (Element x = 0; x < a.size(); ++x)
    for (Element y = 0; y < a.size(); ++y)
      if (f(a.imp(x, y)) != a.imp(f(x), f(y))) return false;
  return true;
}

/// Every map from the universe to itself in lexicographic order (n^n of them).
template <class Visit>
void for_each_map(int n, Visit&& visit) {
  std::vector<Element> img(static_cast<std::size_t>(n), 0);
  while (true) {
    visit(EndoMap(img));
    int i = n - 1;
    while (i >= 0 && img[i] == n - 1) img[i--] = 0;
    if (i < 0) return;
    ++img[i];
  }
}

/// "[0,a,1]" using the algebra's labels.
inline std::string format_map(const Algebra& a, const EndoMap& f) {
  std::string out = "[";
  for (Element x = 0; x < f.size(); ++x) {
    if (x) out += ",";
    out += a.label(f(x));
  }
  return out + "]";
}

}  // namespace hilbert
