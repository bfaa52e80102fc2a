#include "hilbert/algebra.hpp"

#include <set>
#include <sstream>

#include "hilbert/errors.hpp"

namespace hilbert {

Algebra::Algebra(int n, Element one, std::vector<Element> table)
    : n_(n), one_(one), table_(std::move(table)), up_(n), down_(n), labels_(n) {
  for (Element x = 0; x < n_; ++x) {
    labels_[x] = std::to_string(x);
    for (Element y = 0; y < n_; ++y) {
      if (leq(x, y)) {
        up_[x].insert(y);
        down_[y].insert(x);
      }
    }
  }
}

std::vector<std::vector<Element>> Algebra::rows() const {
  std::vector<std::vector<Element>> out(n_);
  for (Element x = 0; x < n_; ++x) out[x].assign(table_.begin() + x * n_, table_.begin() + (x + 1) * n_);
  return out;
}

Algebra Algebra::with_labels(std::vector<std::string> labels) const {
  if (static_cast<int>(labels.size()) != n_) throw MalformedInput("label count does not match algebra size");
  std::set<std::string> seen(labels.begin(), labels.end());
  if (static_cast<int>(seen.size()) != n_) throw MalformedInput("labels are not unique");
  Algebra copy = *this;
  copy.labels_ = std::move(labels);
  return copy;
}

ValidationResult validate_hilbert(int n, Element one, std::span<const Element> flat) {
  if (n < 1 || n > ElementSet::kMaxSize) throw MalformedInput("size must be in 1.." + std::to_string(ElementSet::kMaxSize));
  if (static_cast<long>(flat.size()) != static_cast<long>(n) * n) throw MalformedInput("table is not n x n");
  if (one < 0 || one >= n) throw MalformedInput("unit index out of range");
  for (std::size_t i = 0; i < flat.size(); ++i) {
    if (flat[i] < 0 || flat[i] >= n) {
      throw MalformedInput("entry (" + std::to_string(i / n) + "," + std::to_string(i % n) + ") = " +
                           std::to_string(flat[i]) + " out of range");
    }
  }

  auto imp = [&](Element x, Element y) { return flat[static_cast<std::size_t>(x * n + y)]; };
  auto leq = [&](Element x, Element y) { return imp(x, y) == one; };

  ValidationResult result;
  auto& v = result.violations;
  for (Element x = 0; x < n; ++x) {
    if (!leq(x, x)) v.push_back({"order-reflexive", {x}});
    if (!leq(x, one)) v.push_back({"order-top", {x}});
  }
  for (Element x = 0; x < n; ++x)
    for (Element y = x + 1; y < n; ++y)
      if (leq(x, y) && leq(y, x)) v.push_back({"order-antisymmetric", {x, y}});
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z)
        if (leq(x, y) && leq(y, z) && !leq(x, z)) v.push_back({"order-transitive", {x, y, z}});
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (!leq(x, imp(y, x))) v.push_back({"weakening", {x, y}});
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z)
        if (!leq(imp(x, imp(y, z)), imp(imp(x, y), imp(x, z)))) v.push_back({"exchange", {x, y, z}});

  if (v.empty()) result.algebra = Algebra(n, one, std::vector<Element>(flat.begin(), flat.end()));
  return result;
}

ValidationResult validate_hilbert(const std::vector<std::vector<Element>>& rows, Element one) {
  const int n = static_cast<int>(rows.size());
  std::vector<Element> flat;
  flat.reserve(rows.size() * rows.size());
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n) throw MalformedInput("table is not square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return validate_hilbert(n, one, flat);
}

namespace {
std::string describe(const std::vector<AxiomViolation>& v) {
  std::ostringstream os;
  os << v.size() << " axiom violation(s)";
  if (!v.empty()) {
    os << ", first " << v.front().axiom << " at (";
    for (std::size_t i = 0; i < v.front().instance.size(); ++i) os << (i ? "," : "") << v.front().instance[i];
    os << ")";
  }
  return os.str();
}
}  // namespace

InvalidAlgebra::InvalidAlgebra(std::vector<AxiomViolation> violations)
    : std::runtime_error(describe(violations)), violations_(std::move(violations)) {}

Algebra make_algebra(const std::vector<std::vector<Element>>& rows, Element one) {
  auto r = validate_hilbert(rows, one);
  if (!r.valid()) throw InvalidAlgebra(std::move(r.violations));
  return std::move(*r.algebra);
}

Algebra make_algebra(int n, Element one, std::span<const Element> flat) {
  auto r = validate_hilbert(n, one, flat);
  if (!r.valid()) throw InvalidAlgebra(std::move(r.violations));
  return std::move(*r.algebra);
}

bool OrderRelation::is_partial_order() const {
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

std::optional<Element> OrderRelation::greatest() const {
  for (int t = 0; t < n; ++t) {
    bool top = true;
    for (int x = 0; x < n && top; ++x) top = leq[x][t];
    if (top) return t;
  }
  return std::nullopt;
}

OrderRelation natural_order(const Algebra& a) {
  OrderRelation r{a.size(), std::vector<std::vector<bool>>(a.size(), std::vector<bool>(a.size()))};
  for (Element x = 0; x < a.size(); ++x)
    for (Element y = 0; y < a.size(); ++y) r.leq[x][y] = a.leq(x, y);
  return r;
}

std::optional<Element> maximum(const Algebra& a, ElementSet s) {
  for (Element m : s)
    if (s.subset_of(a.down(m))) return m;
  return std::nullopt;
}

std::optional<Element> minimum(const Algebra& a, ElementSet s) {
  for (Element m : s)
    if (s.subset_of(a.up(m))) return m;
  return std::nullopt;
}

std::optional<Element> partial_meet(const Algebra& a, Element x, Element y) {
  return maximum(a, a.down(x) & a.down(y));
}

std::optional<Element> partial_join(const Algebra& a, Element x, Element y) {
  return minimum(a, a.up(x) & a.up(y));
}

std::optional<Element> compatible_meet(const Algebra& a, Element x, Element y) {
  for (Element c : a.down(x) & a.down(y))
    if (a.leq(x, a.imp(y, c))) return c;
  return std::nullopt;
}

bool is_compatible(const Algebra& a, Element x, Element y) { return compatible_meet(a, x, y).has_value(); }

bool is_subalgebra(const Algebra& a, ElementSet s) {
  if (!s.contains(a.one())) return false;
  for (Element x : s)
    for (Element y : s)
      if (!s.contains(a.imp(x, y))) return false;
  return true;
}

bool is_relative_subsemilattice(const Algebra& a, ElementSet s) {
  for (Element x : s)
    for (Element y : s)
      if (auto m = compatible_meet(a, x, y); m && !s.contains(*m)) return false;
  return true;
}

ElementSet subalgebra_generated(const Algebra& a, ElementSet s) {
  s.insert(a.one());
  for (bool grew = true; grew;) {
    grew = false;
    for (Element x : s)
      for (Element y : s)
        if (!s.contains(a.imp(x, y))) {
          s.insert(a.imp(x, y));
          grew = true;
        }
  }
  return s;
}

std::vector<ElementSet> all_subalgebras(const Algebra& a) {
  std::vector<ElementSet> out;
  const std::uint64_t limit = std::uint64_t{1} << a.size();
  for (std::uint64_t bits = 0; bits < limit; ++bits)
    if (is_subalgebra(a, ElementSet(bits))) out.emplace_back(bits);
  return out;
}

ElementSet block_from(const Algebra& a, ElementSet subalgebra, Element p) {
  ElementSet b;
  for (Element x : subalgebra) b.insert(a.imp(x, p));
  return b;
}

bool is_block(const Algebra& a, ElementSet b) {
  if (!is_subalgebra(a, b)) return false;
  if (!minimum(a, b)) return false;
  for (Element x : b)
    for (Element y : b)
      if (a.imp(a.imp(x, y), x) != x) return false;
  return true;
}

Classification classify(const Algebra& a) {
  Classification c{true, true};
  for (Element x = 0; x < a.size(); ++x) {
    for (Element y = 0; y < a.size(); ++y) {
      if (a.imp(a.imp(x, y), x) != x) c.implication_algebra = false;
      if (!is_compatible(a, x, y)) c.implicative_semilattice = false;
    }
  }
  return c;
}

std::string format_set(const Algebra& a, ElementSet s) {
  std::string out = "{";
  bool first = true;
  for (Element x : s) {
    if (!first) out += ",";
    out += a.label(x);
    first = false;
  }
  return out + "}";
}

}  // namespace hilbert
