#include "hilbert/lattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "hilbert/errors.hpp"

namespace hilbert {

Poset Poset::from_relation(int n, const std::function<bool(int, int)>& le) {
  Poset p{n, std::vector<std::vector<bool>>(n, std::vector<bool>(n))};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) p.leq[x][y] = le(x, y);
  return p;
}

bool Poset::is_partial_order() const {
  for (int x = 0; x < n; ++x) {
    if (!leq[x][x]) return false;
    for (int y = 0; y < n; ++y) {
      if (x != y && leq[x][y] && leq[y][x]) return false;
      for (int z = 0; z < n; ++z)
        if (leq[x][y] && leq[y][z] && !leq[x][z]) return false;
    }
  }
  return true;
}

std::vector<std::pair<int, int>> Poset::covers() const {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x == y || !leq[x][y]) continue;
      bool direct = true;
      for (int z = 0; z < n && direct; ++z)
        if (z != x && z != y && leq[x][z] && leq[z][y]) direct = false;
      if (direct) out.emplace_back(x, y);
    }
  }
  return out;
}

Poset Poset::dual() const {
  return from_relation(n, [this](int x, int y) { return leq[y][x]; });
}

FiniteLattice FiniteLattice::from_order(Poset order) {
  if (order.n == 0) throw InvariantViolation("empty lattice");
  if (!order.is_partial_order()) throw InvariantViolation("relation is not a partial order");
  FiniteLattice l;
  const int n = order.n;
  l.join_.assign(n, std::vector<int>(n, -1));
  l.meet_.assign(n, std::vector<int>(n, -1));
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        if (order.leq[x][z] && order.leq[y][z]) {
          bool least = true;
          for (int w = 0; w < n && least; ++w)
            if (order.leq[x][w] && order.leq[y][w] && !order.leq[z][w]) least = false;
          if (least) l.join_[x][y] = z;
        }
        if (order.leq[z][x] && order.leq[z][y]) {
          bool greatest = true;
          for (int w = 0; w < n && greatest; ++w)
            if (order.leq[w][x] && order.leq[w][y] && !order.leq[w][z]) greatest = false;
          if (greatest) l.meet_[x][y] = z;
        }
      }
      if (l.join_[x][y] < 0 || l.meet_[x][y] < 0)
        throw InvariantViolation("pair (" + std::to_string(x) + "," + std::to_string(y) + ") lacks a join or meet");
    }
  }
  for (int x = 0; x < n; ++x) {
    l.bottom_ = l.meet_[l.bottom_][x];
    l.top_ = l.join_[l.top_][x];
  }
  l.order_ = std::move(order);
  return l;
}

bool FiniteLattice::is_distributive() const {
  for (int x = 0; x < size(); ++x)
    for (int y = 0; y < size(); ++y)
      for (int z = 0; z < size(); ++z)
        if (meet(x, join(y, z)) != join(meet(x, y), meet(x, z))) return false;
  return true;
}

std::optional<int> FiniteLattice::complement(int x) const {
  std::optional<int> found;
  for (int y = 0; y < size(); ++y) {
    if (meet(x, y) == bottom_ && join(x, y) == top_) {
      if (found) return std::nullopt;
      found = y;
    }
  }
  return found;
}

bool FiniteLattice::is_boolean() const {
  if (!is_distributive()) return false;
  for (int x = 0; x < size(); ++x)
    if (!complement(x)) return false;
  return true;
}

FiniteLattice FiniteLattice::dual() const { return from_order(order_.dual()); }

namespace {

// Colour refinement on the Hasse digraph. Colours are dense ids into a
// signature table shared by both posets, so equal colours in a and b mean
// equal refined invariants.
class SharedColouring {
 public:
  std::vector<int> initial(const Poset& p) {
    std::vector<int> colour(p.n);
    for (int x = 0; x < p.n; ++x) {
      int ups = 0, downs = 0;
      for (int y = 0; y < p.n; ++y) {
        ups += p.leq[x][y];
        downs += p.leq[y][x];
      }
      colour[x] = id({ups, downs});
    }
    return colour;
  }

  std::vector<int> refine(const Poset& p, const std::vector<std::pair<int, int>>& covers, const std::vector<int>& colour) {
    std::vector<std::vector<int>> sig(p.n);
    for (int x = 0; x < p.n; ++x) sig[x].push_back(colour[x]);
    std::vector<std::vector<int>> below(p.n), above(p.n);
    for (auto [lo, hi] : covers) {
      above[lo].push_back(colour[hi]);
      below[hi].push_back(colour[lo]);
    }
    std::vector<int> out(p.n);
    for (int x = 0; x < p.n; ++x) {
      std::sort(below[x].begin(), below[x].end());
      std::sort(above[x].begin(), above[x].end());
      sig[x].push_back(-1);
      sig[x].insert(sig[x].end(), below[x].begin(), below[x].end());
      sig[x].push_back(-2);
      sig[x].insert(sig[x].end(), above[x].begin(), above[x].end());
      out[x] = id(sig[x]);
    }
    return out;
  }

 private:
  int id(const std::vector<int>& signature) {
    auto [it, inserted] = ids_.try_emplace(signature, static_cast<int>(ids_.size()));
    return it->second;
  }
  std::map<std::vector<int>, int> ids_;
};

int class_count(const std::vector<int>& colour) {
  std::vector<int> c = colour;
  std::sort(c.begin(), c.end());
  return static_cast<int>(std::unique(c.begin(), c.end()) - c.begin());
}

bool extend(const Poset& a, const Poset& b, const std::vector<int>& ca, const std::vector<int>& cb,
            const std::vector<int>& order, std::size_t depth, std::vector<int>& image, std::vector<bool>& used) {
  if (depth == order.size()) return true;
  const int x = order[depth];
  for (int y = 0; y < b.n; ++y) {
    if (used[y] || cb[y] != ca[x]) continue;
    bool ok = true;
    for (std::size_t k = 0; k < depth && ok; ++k) {
      const int u = order[k];
      ok = a.leq[x][u] == b.leq[y][image[u]] && a.leq[u][x] == b.leq[image[u]][y];
    }
    if (!ok) continue;
    image[x] = y;
    used[y] = true;
    if (extend(a, b, ca, cb, order, depth + 1, image, used)) return true;
    used[y] = false;
  }
  image[x] = -1;
  return false;
}

}  // namespace

std::optional<std::vector<int>> order_isomorphism(const Poset& a, const Poset& b) {
  if (a.n != b.n) return std::nullopt;
  SharedColouring colours;
  std::vector<int> ca = colours.initial(a), cb = colours.initial(b);
  const auto cov_a = a.covers(), cov_b = b.covers();
  if (cov_a.size() != cov_b.size()) return std::nullopt;
  for (int round = 0; round < a.n; ++round) {
    auto na = colours.refine(a, cov_a, ca);
    auto nb = colours.refine(b, cov_b, cb);
    const bool stable = class_count(na) == class_count(ca) && class_count(nb) == class_count(cb);
    ca = std::move(na);
    cb = std::move(nb);
    if (stable) break;
  }
  auto sa = ca, sb = cb;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return std::nullopt;

  // Match the rarest colours first.
  std::map<int, int> freq;
  for (int c : ca) ++freq[c];
  std::vector<int> order(a.n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return freq[ca[x]] < freq[ca[y]]; });

  std::vector<int> image(a.n, -1);
  std::vector<bool> used(b.n, false);
  if (!extend(a, b, ca, cb, order, 0, image, used)) return std::nullopt;
  return image;
}

std::vector<int> compact_elements(const FiniteLattice& l) {
  std::vector<int> out(l.size());
  std::iota(out.begin(), out.end(), 0);
  return out;
}

}  // namespace hilbert
