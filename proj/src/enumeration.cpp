#include "hilbert/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include "hilbert/closure.hpp"
#include "hilbert/errors.hpp"
#include "hilbert/filters.hpp"
#include "hilbert/multipliers.hpp"

namespace hilbert {

double estimated_search_cost(int n) {
  // Orders on the n-1 non-unit elements times the free cells, each with at
  // most n-1 candidates.
  const double m = n - 1;
  return std::pow(3.0, m * (m - 1) / 2) * std::pow(std::max(1.0, m), m * m);
}

namespace {

using Order = std::vector<std::vector<bool>>;

// Orders on 0..n-1 with n-1 on top. Natural labellings only: x < y in the
// order implies x < y as indices.
std::vector<Order> candidate_orders(int n, bool natural_only) {
  const int m = n - 1;
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) pairs.emplace_back(i, j);

  std::vector<Order> out;
  Order leq(n, std::vector<bool>(n, false));
  for (int x = 0; x < n; ++x) {
    leq[x][x] = true;
    leq[x][n - 1] = true;
  }
  const int choices = natural_only ? 2 : 3;
  std::vector<int> pick(pairs.size(), 0);
  while (true) {
    Order r = leq;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      auto [i, j] = pairs[k];
      if (pick[k] == 1) r[i][j] = true;
      if (pick[k] == 2) r[j][i] = true;
    }
    bool transitive = true;
    for (int x = 0; x < n && transitive; ++x)
      for (int y = 0; y < n && transitive; ++y)
        for (int z = 0; z < n && transitive; ++z)
          if (r[x][y] && r[y][z] && !r[x][z]) transitive = false;
    if (transitive) out.push_back(std::move(r));

    std::size_t k = 0;
    while (k < pick.size() && ++pick[k] == choices) pick[k++] = 0;
    if (k == pick.size()) break;
  }
  return out;
}

// Fills the cells of one order's table depth first.
class TableSearch {
 public:
  TableSearch(int n, const Order& leq) : n_(n), leq_(leq), t_(static_cast<std::size_t>(n * n), -1) {}

  std::vector<std::vector<std::vector<Element>>> run() {
    const Element one = n_ - 1;
    for (Element x = 0; x < n_; ++x) {
      for (Element y = 0; y < n_; ++y) {
        if (leq_[x][y]) {
          at(x, y) = one;
        } else if (x == one) {
          at(x, y) = y;  // assumed here, re-verified by validate_hilbert
        } else {
          free_.emplace_back(x, y);
        }
      }
    }
    if (pruned()) return {};
    fill(0);
    return std::move(found_);
  }

 private:
  Element& at(Element x, Element y) { return t_[static_cast<std::size_t>(x * n_ + y)]; }
  Element get(Element x, Element y) const { return t_[static_cast<std::size_t>(x * n_ + y)]; }

  // An exchange instance whose cells are all known fails.
  bool pruned() const {
    for (Element x = 0; x < n_; ++x)
      for (Element y = 0; y < n_; ++y) {
        const Element xy = get(x, y);
        if (xy < 0) continue;
        for (Element z = 0; z < n_; ++z) {
          const Element yz = get(y, z), xz = get(x, z);
          if (yz < 0 || xz < 0) continue;
          const Element lhs = get(x, yz), rhs = get(xy, xz);
          if (lhs >= 0 && rhs >= 0 && !leq_[lhs][rhs]) return true;
        }
      }
    return false;
  }

  void fill(std::size_t k) {
    if (k == free_.size()) {
      found_.emplace_back();
      for (Element x = 0; x < n_; ++x) found_.back().emplace_back(t_.begin() + x * n_, t_.begin() + (x + 1) * n_);
      return;
    }
    auto [x, y] = free_[k];
    for (Element v = 0; v < n_ - 1; ++v) {
      if (!leq_[y][v]) continue;
      at(x, y) = v;
      if (!pruned()) fill(k + 1);
    }
    at(x, y) = -1;
  }

  int n_;
  const Order& leq_;
  std::vector<Element> t_;
  std::vector<std::pair<Element, Element>> free_;
  std::vector<std::vector<std::vector<Element>>> found_;
};

std::vector<std::vector<std::vector<Element>>> search_all(int n, bool natural_only, int jobs) {
  const auto orders = candidate_orders(n, natural_only);
  std::vector<std::vector<std::vector<std::vector<Element>>>> per_order(orders.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < orders.size();) per_order[i] = TableSearch(n, orders[i]).run();
  };
  const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(orders.size())));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  std::vector<std::vector<std::vector<Element>>> out;
  for (auto& tables : per_order)
    for (auto& t : tables) out.push_back(std::move(t));
  return out;
}

// Features preserved by isomorphisms; the unit sorts last.
std::vector<int> invariant_key(const Algebra& a, Element x) {
  int fixes_right = 0, fixes_left = 0;
  for (Element y = 0; y < a.size(); ++y) {
    fixes_right += a.imp(x, y) == y;
    fixes_left += a.imp(y, x) == x;
  }
  return {x == a.one(), a.down(x).size(), a.up(x).size(), fixes_right, fixes_left};
}

// Calls visit(perm) for every permutation that keeps each invariant class
// in its block of positions, classes ordered by key.
template <class Visit>
void for_each_class_permutation(const Algebra& a, Visit&& visit) {
  const int n = a.size();
  std::map<std::vector<int>, std::vector<Element>> classes;
  for (Element x = 0; x < n; ++x) classes[invariant_key(a, x)].push_back(x);
  std::vector<std::vector<Element>> blocks;
  for (auto& [key, members] : classes) blocks.push_back(members);

  std::vector<int> perm(n);
  std::vector<std::vector<Element>> orders = blocks;
  auto rec = [&](auto&& self, std::size_t b, int offset) -> void {
    if (b == orders.size()) {
      visit(perm);
      return;
    }
    auto& block = orders[b];
    std::sort(block.begin(), block.end());
    do {
      for (std::size_t i = 0; i < block.size(); ++i) perm[block[i]] = offset + static_cast<int>(i);
      self(self, b + 1, offset + static_cast<int>(block.size()));
    } while (std::next_permutation(block.begin(), block.end()));
  };
  rec(rec, 0, 0);
}

std::vector<Element> permuted_table(const Algebra& a, const std::vector<int>& perm) {
  const int n = a.size();
  std::vector<Element> t(static_cast<std::size_t>(n * n));
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) t[static_cast<std::size_t>(perm[x] * n + perm[y])] = perm[a.imp(x, y)];
  return t;
}

}  // namespace

CanonicalForm canonical_form(const Algebra& a) {
  CanonicalForm best;
  for_each_class_permutation(a, [&](const std::vector<int>& perm) {
    auto t = permuted_table(a, perm);
    if (best.table.empty() || t < best.table) {
      best.table = std::move(t);
      best.perm = perm;
    }
  });
  return best;
}

std::optional<std::vector<int>> are_isomorphic(const Algebra& a, const Algebra& b) {
  if (a.size() != b.size()) return std::nullopt;
  const auto ca = canonical_form(a), cb = canonical_form(b);
  if (ca.table != cb.table) return std::nullopt;
  std::vector<int> inverse_b(b.size());
  for (Element x = 0; x < b.size(); ++x) inverse_b[cb.perm[x]] = x;
  std::vector<int> h(a.size());
  for (Element x = 0; x < a.size(); ++x) h[x] = inverse_b[ca.perm[x]];
  for (Element x = 0; x < a.size(); ++x)
    for (Element y = 0; y < a.size(); ++y)
      if (h[a.imp(x, y)] != b.imp(h[x], h[y])) throw InvariantViolation("canonical forms agree but map is no isomorphism");
  return h;
}

int automorphism_count(const Algebra& a) {
  int count = 0;
  for_each_class_permutation(a, [&](const std::vector<int>& perm) { count += permuted_table(a, perm) == a.table(); });
  return count;
}

Algebra relabel(const Algebra& a, const std::vector<int>& perm) {
  const auto t = permuted_table(a, perm);
  std::vector<std::string> labels(a.size());
  for (Element x = 0; x < a.size(); ++x) labels[perm[x]] = a.label(x);
  return make_algebra(a.size(), perm[a.one()], t).with_labels(std::move(labels));
}

std::vector<Algebra> enumerate_tables(int n, const EnumerationOptions& options) {
  if (n < 1) throw PreconditionError("size must be at least 1");
  if (n > options.bound || n > ElementSet::kMaxSize) {
    std::ostringstream msg;
    msg << "size " << n << " exceeds bound " << options.bound << " (estimated " << estimated_search_cost(n)
        << " search nodes)";
    throw BoundExceeded(msg.str());
  }
  std::vector<Algebra> out;
  for (auto& rows : search_all(n, options.deduplicate, options.jobs)) {
    auto r = validate_hilbert(rows, n - 1);
    if (!r.valid()) {
      const auto& v = r.violations.front();
      std::string inst;
      for (Element e : v.instance) inst += (inst.empty() ? "" : ",") + std::to_string(e);
      throw InvariantViolation("search produced a table violating " + v.axiom + " at (" + inst + ")");
    }
    out.push_back(std::move(*r.algebra));
  }
  return out;
}

AlgebraCatalog enumerate_algebras(int n, const EnumerationOptions& options) {
  AlgebraCatalog catalog;
  catalog.size = n;
  std::vector<Algebra> reps;
  if (options.deduplicate) {
    std::map<std::vector<Element>, std::size_t> seen;
    for (const Algebra& a : enumerate_tables(n, options)) {
      auto cf = canonical_form(a);
      if (seen.count(cf.table)) continue;
      seen.emplace(cf.table, 0);
    }
    for (const auto& [table, unused] : seen) reps.push_back(make_algebra(n, n - 1, table));
  } else {
    reps = enumerate_tables(n, options);
  }
  int k = 0;
  for (Algebra& a : reps) {
    CatalogEntry e{"A" + std::to_string(n) + "_" + std::to_string(++k), std::move(a), 0, 0, 0, {}};
    e.filters = static_cast<int>(all_filters(e.algebra).carrier.size());
    e.multipliers = static_cast<int>(multipliers(e.algebra).size());
    e.closure_endomorphisms = static_cast<int>(closure_endomorphisms(e.algebra).size());
    e.flags = classify(e.algebra);
    catalog.entries.push_back(std::move(e));
  }
  return catalog;
}

}  // namespace hilbert
