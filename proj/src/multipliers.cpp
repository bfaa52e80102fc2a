#include "hilbert/multipliers.hpp"

#include <algorithm>

#include "hilbert/errors.hpp"
#include "hilbert/filters.hpp"
#include "hilbert/lattice.hpp"

namespace hilbert {

bool is_multiplier(const Algebra& a, const EndoMap& f) {
  for (Element x = 0; x < a.size(); ++x)
    for (Element y = 0; y < a.size(); ++y)
      if (f(a.imp(x, y)) != a.imp(x, f(y))) return false;
  return true;
}

EndoMap eps(const Algebra& a) { return EndoMap::identity(a.size()); }
EndoMap iota(const Algebra& a) { return EndoMap::constant(a.size(), a.one()); }

EndoMap alpha(const Algebra& a, Element p) {
  std::vector<Element> img(a.size());
  for (Element x = 0; x < a.size(); ++x) img[x] = a.imp(p, x);
  return EndoMap(std::move(img));
}

EndoMap beta(const Algebra& a, Element p) {
  std::vector<Element> img(a.size());
  for (Element x = 0; x < a.size(); ++x) img[x] = a.imp(a.imp(x, p), x);
  return EndoMap(std::move(img));
}

EndoMap delta(const Algebra& a, Element p) {
  std::vector<Element> img(a.size());
  for (Element x = 0; x < a.size(); ++x) img[x] = a.imp(a.imp(p, x), x);
  return EndoMap(std::move(img));
}

EndoMap pointwise_imp(const Algebra& a, const EndoMap& f, const EndoMap& g) {
  std::vector<Element> img(a.size());
  for (Element x = 0; x < a.size(); ++x) img[x] = a.imp(f(x), g(x));
  return EndoMap(std::move(img));
}

EndoMap pointwise_meet(const Algebra& a, const EndoMap& f, const EndoMap& g) {
  std::vector<Element> img(a.size());
  for (Element x = 0; x < a.size(); ++x) {
    auto m = partial_meet(a, f(x), g(x));
    if (!m) throw InvariantViolation("no meet of " + a.label(f(x)) + " and " + a.label(g(x)) + " at x=" + a.label(x));
    img[x] = *m;
  }
  return EndoMap(std::move(img));
}

EndoMap pointwise_join(const Algebra& a, const EndoMap& f, const EndoMap& g) {
  std::vector<Element> img(a.size());
  for (Element x = 0; x < a.size(); ++x) {
    auto m = partial_join(a, f(x), g(x));
    if (!m) throw InvariantViolation("no join of " + a.label(f(x)) + " and " + a.label(g(x)) + " at x=" + a.label(x));
    img[x] = *m;
  }
  return EndoMap(std::move(img));
}

namespace {

class MultiplierSearch {
 public:
  explicit MultiplierSearch(const Algebra& a) : a_(a) {}

  std::vector<EndoMap> run() {
    std::vector<Element> img(a_.size(), -1);
    search(img);
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

 private:
  // Sets img[x] = v and closes under f(z -> y) = z -> f(y). False on conflict.
  bool assign(std::vector<Element>& img, Element x, Element v) const {
    std::vector<Element> pending{x};
    if (img[x] >= 0) return img[x] == v;
    img[x] = v;
    while (!pending.empty()) {
      const Element y = pending.back();
      pending.pop_back();
      for (Element z = 0; z < a_.size(); ++z) {
        const Element target = a_.imp(z, y);
        const Element value = a_.imp(z, img[y]);
        if (img[target] < 0) {
          img[target] = value;
          pending.push_back(target);
        } else if (img[target] != value) {
          return false;
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

std::vector<EndoMap> multipliers(const Algebra& a) { return MultiplierSearch(a).run(); }

std::vector<EndoMap> multipliers_brute_force(const Algebra& a) {
  std::vector<EndoMap> out;
  for_each_map(a.size(), [&](const EndoMap& f) {
    if (is_multiplier(a, f)) out.push_back(f);
  });
  return out;
}

int MultiplierAlgebra::index_of(const EndoMap& f) const {
  auto it = std::lower_bound(carrier.begin(), carrier.end(), f);
  return (it != carrier.end() && *it == f) ? static_cast<int>(it - carrier.begin()) : -1;
}

MultiplierAlgebra all_multipliers(const Algebra& a) {
  MultiplierAlgebra m;
  m.carrier = multipliers(a);
  const int k = m.size();
  auto index = [&](const EndoMap& f, const char* op) {
    const int i = m.index_of(f);
    if (i < 0) throw InvariantViolation(std::string("multipliers not closed under ") + op + ": " + format_map(a, f));
    return i;
  };
  m.eps = index(eps(a), "identity");
  m.iota = index(iota(a), "unit map");
  m.imp.assign(k, std::vector<int>(k));
  m.compose.assign(k, std::vector<int>(k));
  m.meet.assign(k, std::vector<int>(k));
  m.complement.assign(k, -1);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      m.imp[i][j] = index(pointwise_imp(a, m.carrier[i], m.carrier[j]), "->");
      m.compose[i][j] = index(compose(m.carrier[i], m.carrier[j]), "composition");
      m.meet[i][j] = index(pointwise_meet(a, m.carrier[i], m.carrier[j]), "meet");
    }
  }
  for (int i = 0; i < k; ++i) m.complement[i] = m.imp[i][m.eps];

  // (M, ->, ι) is a bounded implication algebra with least element ε.
  std::vector<Element> flat;
  for (int i = 0; i < k; ++i) flat.insert(flat.end(), m.imp[i].begin(), m.imp[i].end());
  auto as_algebra = validate_hilbert(k, m.iota, flat);
  if (!as_algebra.valid()) throw InvariantViolation("(M, ->, iota) violates " + as_algebra.violations.front().axiom);
  const Algebra& mh = *as_algebra.algebra;
  if (!classify(mh).implication_algebra) throw InvariantViolation("(M, ->, iota) is not an implication algebra");
  for (int i = 0; i < k; ++i) {
    if (!mh.leq(m.eps, i)) throw InvariantViolation("epsilon is not least in M");
    for (int j = 0; j < k; ++j) {
      const bool pointwise = pointwise_leq(a, m.carrier[i], m.carrier[j]);
      if (pointwise != mh.leq(i, j)) throw InvariantViolation("order of (M, ->) is not the pointwise order");
      if (pointwise != (m.compose[i][j] == j)) throw InvariantViolation("phi <= psi does not match phi o psi = psi");
    }
  }

  // Boolean lattice with ∘ as join and ∧ as meet.
  auto lattice = FiniteLattice::from_order(
      Poset::from_relation(k, [&](int i, int j) { return pointwise_leq(a, m.carrier[i], m.carrier[j]); }));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (lattice.join(i, j) != m.compose[i][j]) throw InvariantViolation("composition is not the join in M");
      if (lattice.meet(i, j) != m.meet[i][j]) throw InvariantViolation("pointwise meet is not the meet in M");
    }
    const int c = m.complement[i];
    if (m.meet[i][c] != m.eps || m.compose[i][c] != m.iota)
      throw InvariantViolation("phi -> eps is not a complement of " + format_map(a, m.carrier[i]));
  }
  if (!lattice.is_boolean()) throw InvariantViolation("M is not a Boolean lattice");
  return m;
}

ElementSet multiplier_block(const Algebra& a, Element x) {
  ElementSet out;
  for (const auto& f : multipliers(a)) out.insert(f(x));
  return out;
}

VerificationReport check_multiplier_calculus(const Algebra& a) {
  const auto ms = multipliers(a);
  struct Law {
    const char* name;
    bool (*holds)(const Algebra&, const EndoMap&, const EndoMap&, Element);
  };
  // φ = phi, ψ = psi; dot notation unfolded into explicit parentheses.
  static const Law laws[] = {
      {"(a) phi 1 = 1", [](const Algebra& a, const EndoMap& phi, const EndoMap&, Element) { return phi(a.one()) == a.one(); }},
      {"(b) x <= phi x", [](const Algebra& a, const EndoMap& phi, const EndoMap&, Element x) { return a.leq(x, phi(x)); }},
      {"(c) phi x = (phi x -> x) -> x",
       [](const Algebra& a, const EndoMap& phi, const EndoMap&, Element x) {
         return phi(x) == a.imp(a.imp(phi(x), x), x);
       }},
      {"(d) phi x = (phi x -> x) -> phi x",
       [](const Algebra& a, const EndoMap& phi, const EndoMap&, Element x) {
         return phi(x) == a.imp(a.imp(phi(x), x), phi(x));
       }},
      {"(e) phi phi x = phi x",
       [](const Algebra&, const EndoMap& phi, const EndoMap&, Element x) { return phi(phi(x)) == phi(x); }},
      {"(f) phi x = (phi x -> psi x) -> phi x",
       [](const Algebra& a, const EndoMap& phi, const EndoMap& psi, Element x) {
         return phi(x) == a.imp(a.imp(phi(x), psi(x)), phi(x));
       }},
      {"(g) psi phi x = (phi x -> x) -> psi x",
       [](const Algebra& a, const EndoMap& phi, const EndoMap& psi, Element x) {
         return psi(phi(x)) == a.imp(a.imp(phi(x), x), psi(x));
       }},
      {"(h) psi phi x = phi psi x",
       [](const Algebra&, const EndoMap& phi, const EndoMap& psi, Element x) { return psi(phi(x)) == phi(psi(x)); }},
      {"(i) psi phi x = (phi x -> psi x) -> psi x",
       [](const Algebra& a, const EndoMap& phi, const EndoMap& psi, Element x) {
         return psi(phi(x)) == a.imp(a.imp(phi(x), psi(x)), psi(x));
       }},
  };

  VerificationReport report;
  for (const Law& law : laws) {
    Check c(std::string("multiplier-calculus/") + law.name);
    for (const auto& phi : ms)
      for (const auto& psi : ms)
        for (Element x = 0; x < a.size(); ++x)
          c.expect(law.holds(a, phi, psi, x), [&] {
            return "phi=" + format_map(a, phi) + " psi=" + format_map(a, psi) + " x=" + a.label(x);
          });
    report.add(c.finish());
  }
  return report;
}

VerificationReport check_multiplier_structure(const Algebra& a) {
  VerificationReport report;
  const auto ms = multipliers(a);

  {
    Check c("multipliers/propagation-matches-brute-force");
    if (a.size() <= 6) {
      c.expect(ms == multipliers_brute_force(a), [] { return std::string("multiplier sets differ"); });
    } else {
      c.skip("n^n enumeration only for n <= 6");
    }
    report.add(c.finish());
  }
  {
    Check c("multipliers/named-families");
    c.expect(is_multiplier(a, eps(a)), [] { return std::string("eps"); });
    c.expect(is_multiplier(a, iota(a)), [] { return std::string("iota"); });
    for (Element p = 0; p < a.size(); ++p) {
      c.expect(is_multiplier(a, alpha(a, p)), [&] { return "alpha_" + a.label(p); });
      c.expect(is_multiplier(a, beta(a, p)), [&] { return "beta_" + a.label(p); });
      c.expect(is_multiplier(a, delta(a, p)), [&] { return "delta_" + a.label(p); });
    }
    report.add(c.finish());
  }
  {
    Check c("multipliers/fixpoints-are-range-subalgebra");
    Check k("multipliers/kernel-meets-fixpoints-in-unit");
    for (const auto& f : ms) {
      ElementSet fix, ker;
      for (Element x = 0; x < a.size(); ++x) {
        if (f(x) == x) fix.insert(x);
        if (f(x) == a.one()) ker.insert(x);
      }
      c.expect(fix == f.range() && is_subalgebra(a, fix), [&] { return "phi=" + format_map(a, f); });
      k.expect((ker & fix) == ElementSet::singleton(a.one()), [&] { return "phi=" + format_map(a, f); });
    }
    report.add(c.finish());
    report.add(k.finish());
  }
  {
    Check c("multipliers/boolean-implication-algebra");
    try {
      all_multipliers(a);
    } catch (const InvariantViolation& e) {
      c.fail(e.what());
    }
    report.add(c.finish());
  }
  {
    Check c("multipliers/blocks");
    for (Element x = 0; x < a.size(); ++x) {
      const ElementSet b = multiplier_block(a, x);
      c.expect(is_block(a, b), [&] { return "M(" + a.label(x) + ")=" + format_set(a, b) + " not a block"; });
      for (Element u : b)
        for (Element v : b)
          c.expect(is_compatible(a, u, v), [&] {
            return "M(" + a.label(x) + "): " + a.label(u) + "," + a.label(v) + " incompatible";
          });
    }
    report.add(c.finish());
  }
  return report;
}

}  // namespace hilbert
