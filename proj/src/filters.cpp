#include "hilbert/filters.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "hilbert/errors.hpp"

namespace hilbert {

namespace {

bool by_size_then_bits(ElementSet x, ElementSet y) {
  if (x.size() != y.size()) return x.size() < y.size();
  return x.bits() < y.bits();
}

std::vector<ElementSet> sorted(std::set<ElementSet> s) {
  std::vector<ElementSet> v(s.begin(), s.end());
  std::sort(v.begin(), v.end(), by_size_then_bits);
  return v;
}

// All sets reachable from `seeds` by pairwise joins.
template <class Join>
std::set<ElementSet> join_closure(std::vector<ElementSet> seeds, Join join) {
  std::set<ElementSet> found(seeds.begin(), seeds.end());
  std::deque<ElementSet> queue(found.begin(), found.end());
  while (!queue.empty()) {
    ElementSet j = queue.front();
    queue.pop_front();
    const std::vector<ElementSet> snapshot(found.begin(), found.end());
    for (ElementSet k : snapshot) {
      ElementSet m = join(j, k);
      if (found.insert(m).second) queue.push_back(m);
    }
  }
  return found;
}

}  // namespace

bool is_filter(const Algebra& a, ElementSet s) {
  if (!s.contains(a.one())) return false;
  for (Element x : s)
    for (Element y = 0; y < a.size(); ++y)
      if (s.contains(a.imp(x, y)) && !s.contains(y)) return false;
  return true;
}

bool is_filter_by_bounds(const Algebra& a, ElementSet s) {
  if (s.empty()) return false;
  for (Element x : s)
    for (Element y : s)
      for (Element z = 0; z < a.size(); ++z)
        if (a.leq(x, a.imp(y, z)) && !s.contains(z)) return false;
  return true;
}

bool is_semilattice_filter(const Algebra& a, ElementSet s) {
  if (!s.contains(a.one())) return false;
  for (Element x : s)
    if (!a.up(x).subset_of(s)) return false;
  return is_relative_subsemilattice(a, s);
}

ElementSet filter_generated(const Algebra& a, ElementSet generators) {
  ElementSet j = generators;
  j.insert(a.one());
  for (bool grew = true; grew;) {
    grew = false;
    for (Element x : j) {
      for (Element y = 0; y < a.size(); ++y) {
        if (!j.contains(y) && j.contains(a.imp(x, y))) {
          j.insert(y);
          grew = true;
        }
      }
    }
  }
  return j;
}

ElementSet filter_join(const Algebra& a, ElementSet j, ElementSet k) { return filter_generated(a, j | k); }

int FilterLattice::index_of(ElementSet j) const {
  auto it = std::find(carrier.begin(), carrier.end(), j);
  return it == carrier.end() ? -1 : static_cast<int>(it - carrier.begin());
}

FilterLattice all_filters(const Algebra& a) {
  std::vector<ElementSet> seeds{filter_generated(a, {})};
  for (Element x = 0; x < a.size(); ++x) seeds.push_back(filter_generated(a, ElementSet::singleton(x)));
  FilterLattice fl;
  fl.carrier = sorted(join_closure(seeds, [&](ElementSet j, ElementSet k) { return filter_join(a, j, k); }));
  const auto& c = fl.carrier;
  fl.lattice = FiniteLattice::from_order(
      Poset::from_relation(static_cast<int>(c.size()), [&](int x, int y) { return c[x].subset_of(c[y]); }));
  return fl;
}

std::vector<ElementSet> all_filters_brute_force(const Algebra& a) {
  std::set<ElementSet> out;
  const std::uint64_t limit = std::uint64_t{1} << a.size();
  for (std::uint64_t bits = 0; bits < limit; ++bits)
    if (is_filter(a, ElementSet(bits))) out.insert(ElementSet(bits));
  return sorted(std::move(out));
}

std::vector<ElementSet> finitely_generated_filters(const Algebra& a) {
  std::vector<ElementSet> seeds{ElementSet::singleton(a.one())};
  for (Element p = 0; p < a.size(); ++p) seeds.push_back(principal_filter(a, p));
  return sorted(join_closure(seeds, [&](ElementSet j, ElementSet k) { return filter_join(a, j, k); }));
}

ElementSet class_of(const Algebra& a, ElementSet j, Element x) {
  ElementSet c;
  for (Element b = 0; b < a.size(); ++b)
    if (j.contains(a.imp(b, x)) && j.contains(a.imp(x, b))) c.insert(b);
  return c;
}

std::vector<ElementSet> congruence_classes(const Algebra& a, ElementSet j) {
  std::vector<ElementSet> out;
  ElementSet covered;
  for (Element x = 0; x < a.size(); ++x) {
    if (covered.contains(x)) continue;
    ElementSet c = class_of(a, j, x);
    covered |= c;
    out.push_back(c);
  }
  return out;
}

ElementSet lower_set(const Algebra& a, ElementSet j, Element x) {
  ElementSet out;
  for (Element y = 0; y < a.size(); ++y)
    if (j.contains(a.imp(y, x))) out.insert(y);
  return out;
}

std::optional<Element> monomial_max(const Algebra& a, ElementSet j, Element x) {
  return maximum(a, class_of(a, j, x));
}

bool is_monomial(const Algebra& a, ElementSet j) {
  for (Element x = 0; x < a.size(); ++x)
    if (!monomial_max(a, j, x)) return false;
  return true;
}

bool is_ideal(const Algebra& a, ElementSet s) {
  for (Element x : s) {
    if (!a.down(x).subset_of(s)) return false;
    for (Element y : s)
      if (auto m = partial_join(a, x, y); m && !s.contains(*m)) return false;
  }
  return true;
}

bool is_alpha_closed(const Algebra& a, ElementSet s) {
  for (Element x : s)
    for (Element p = 0; p < a.size(); ++p)
      if (!s.contains(a.imp(p, x))) return false;
  return true;
}

}  // namespace hilbert
