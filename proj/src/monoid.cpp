#include "hilbert/monoid.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "hilbert/errors.hpp"

namespace hilbert {

namespace {

class EndomorphismSearch {
 public:
  explicit EndomorphismSearch(const Algebra& a) : a_(a) {}

  std::vector<EndoMap> run() {
    std::vector<Element> img(a_.size(), -1);
    search(img);
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

 private:
  // f(x -> y) = f(x) -> f(y) for every pair of assigned x, y.
  bool assign(std::vector<Element>& img, Element x, Element v) const {
    if (img[x] >= 0) return img[x] == v;
    img[x] = v;
    std::vector<Element> pending{x};
    while (!pending.empty()) {
      const Element u = pending.back();
      pending.pop_back();
      for (Element y = 0; y < a_.size(); ++y) {
        if (img[y] < 0) continue;
        const std::pair<Element, Element> forced[] = {{a_.imp(u, y), a_.imp(img[u], img[y])},
                                                      {a_.imp(y, u), a_.imp(img[y], img[u])}};
        for (auto [target, value] : forced) {
          if (img[target] < 0) {
            img[target] = value;
            pending.push_back(target);
          } else if (img[target] != value) {
            return false;
          }
        }
      }
    }
    return true;
  }

  void search(const std::vector<Element>& img) {
    auto open = std::find(img.begin(), img.end(), -1);
    if (open == img.end()) {
      found_.emplace_back(img);
      return;
    }
    const Element x = static_cast<Element>(open - img.begin());
    for (Element v = 0; v < a_.size(); ++v) {
      std::vector<Element> next = img;
      if (assign(next, x, v)) search(next);
    }
  }

  const Algebra& a_;
  std::vector<EndoMap> found_;
};

}  // namespace

std::vector<EndoMap> endomorphisms(const Algebra& a) { return EndomorphismSearch(a).run(); }

std::vector<EndoMap> endomorphisms_brute_force(const Algebra& a) {
  std::vector<EndoMap> out;
  for_each_map(a.size(), [&](const EndoMap& f) {
    if (is_endomorphism(a, f)) out.push_back(f);
  });
  return out;
}

int EndoMonoid::index_of(const EndoMap& f) const {
  auto it = std::lower_bound(carrier.begin(), carrier.end(), f);
  return (it != carrier.end() && *it == f) ? static_cast<int>(it - carrier.begin()) : -1;
}

EndoMonoid endomorphism_monoid(const Algebra& a) {
  EndoMonoid m;
  m.carrier = endomorphisms(a);
  m.identity = m.index_of(EndoMap::identity(a.size()));
  if (m.identity < 0) throw InvariantViolation("identity is not an endomorphism");
  const int k = m.size();
  m.compose.assign(k, std::vector<int>(k));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      m.compose[i][j] = m.index_of(compose(m.carrier[i], m.carrier[j]));
      if (m.compose[i][j] < 0) throw InvariantViolation("endomorphisms not closed under composition");
    }
  }
  return m;
}

namespace {

using Invariant = std::tuple<bool, int, int, int, int, int, int>;

// Isomorphism-invariant features of one element of a monoid.
Invariant invariant_of(const EndoMonoid& m, int f) {
  const int k = m.size();
  std::vector<bool> left(k), right(k);
  int left_fixed = 0, right_fixed = 0;
  for (int g = 0; g < k; ++g) {
    left[m.compose[f][g]] = true;
    right[m.compose[g][f]] = true;
    left_fixed += m.compose[f][g] == g;
    right_fixed += m.compose[g][f] == g;
  }
  // Powers f, f^2, ... until a repeat: tail length and period.
  std::map<int, int> seen;
  int power = f, step = 1;
  while (!seen.count(power)) {
    seen[power] = step++;
    power = m.compose[power][f];
  }
  const int tail = seen[power] - 1;
  const int period = step - seen[power];
  return {m.compose[f][f] == f,
          static_cast<int>(std::count(left.begin(), left.end(), true)),
          static_cast<int>(std::count(right.begin(), right.end(), true)),
          left_fixed,
          right_fixed,
          tail,
          period};
}

class MonoidMatcher {
 public:
  MonoidMatcher(const EndoMonoid& m1, const EndoMonoid& m2) : m1_(m1), m2_(m2) {}

  std::optional<std::vector<int>> run() {
    const int k = m1_.size();
    if (k != m2_.size()) return std::nullopt;
    std::map<Invariant, std::vector<int>> classes2;
    std::vector<Invariant> inv1(k);
    for (int f = 0; f < k; ++f) {
      inv1[f] = invariant_of(m1_, f);
      classes2[invariant_of(m2_, f)].push_back(f);
    }
    candidates_.resize(k);
    std::map<Invariant, int> count1;
    for (int f = 0; f < k; ++f) ++count1[inv1[f]];
    for (const auto& [inv, members] : classes2)
      if (count1[inv] != static_cast<int>(members.size())) return std::nullopt;
    for (int f = 0; f < k; ++f) candidates_[f] = classes2[inv1[f]];

    order_.resize(k);
    for (int f = 0; f < k; ++f) order_[f] = f;
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int x, int y) { return candidates_[x].size() < candidates_[y].size(); });
    map_.assign(k, -1);
    used_.assign(k, false);
    if (!assign(m1_.identity, m2_.identity)) return std::nullopt;
    if (search(0)) return map_;
    return std::nullopt;
  }

 private:
  bool assign(int x, int y) {
    if (map_[x] >= 0) return map_[x] == y;
    if (used_[y]) return false;
    map_[x] = y;
    used_[y] = true;
    return true;
  }

  bool consistent(int x) const {
    for (int y = 0; y < m1_.size(); ++y) {
      if (map_[y] < 0) continue;
      for (auto [p, q] : {std::pair{x, y}, std::pair{y, x}}) {
        const int r = m1_.compose[p][q];
        if (map_[r] >= 0 && map_[r] != m2_.compose[map_[p]][map_[q]]) return false;
      }
    }
    return true;
  }

  bool search(std::size_t pos) {
    while (pos < order_.size() && map_[order_[pos]] >= 0) ++pos;
    if (pos == order_.size()) return true;
    const int x = order_[pos];
    for (int y : candidates_[x]) {
      if (used_[y]) continue;
      map_[x] = y;
      used_[y] = true;
      if (consistent(x) && search(pos + 1)) return true;
      map_[x] = -1;
      used_[y] = false;
    }
    return false;
  }

  const EndoMonoid& m1_;
  const EndoMonoid& m2_;
  std::vector<std::vector<int>> candidates_;
  std::vector<int> order_;
  std::vector<int> map_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<std::vector<int>> monoid_isomorphism(const EndoMonoid& m1, const EndoMonoid& m2) {
  auto h = MonoidMatcher(m1, m2).run();
  if (!h) return h;
  for (int i = 0; i < m1.size(); ++i)
    for (int j = 0; j < m1.size(); ++j)
      if ((*h)[m1.compose[i][j]] != m2.compose[(*h)[i]][(*h)[j]])
        throw InvariantViolation("monoid matcher returned a non-homomorphism");
  return h;
}

std::vector<int> idempotent_stable_elements(const EndoMonoid& m) {
  std::vector<int> idempotents, out;
  for (int t = 0; t < m.size(); ++t)
    if (m.compose[t][t] == t) idempotents.push_back(t);
  for (int f = 0; f < m.size(); ++f) {
    const bool stable = std::all_of(idempotents.begin(), idempotents.end(), [&](int t) {
      const int tf = m.compose[t][f];
      return m.compose[tf][tf] == tf;
    });
    if (stable) out.push_back(f);
  }
  return out;
}

}  // namespace hilbert
