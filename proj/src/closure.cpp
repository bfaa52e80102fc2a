#include "hilbert/closure.hpp"

#include <algorithm>
#include <set>

#include "hilbert/adjoint.hpp"
#include "hilbert/errors.hpp"
#include "hilbert/filters.hpp"
#include "hilbert/monoid.hpp"
#include "hilbert/multipliers.hpp"

namespace hilbert {

bool is_closure_endomorphism(const Algebra& a, const EndoMap& f) {
  if (!is_endomorphism(a, f) || !is_isotone(a, f) || !is_idempotent(f)) return false;
  for (Element x = 0; x < a.size(); ++x)
    if (!a.leq(x, f(x))) return false;
  return true;
}

bool satisfies_closure_identity(const Algebra& a, const EndoMap& f) {
  for (Element x = 0; x < a.size(); ++x)
    for (Element y = 0; y < a.size(); ++y)
      if (a.imp(f(x), f(y)) != a.imp(x, f(y))) return false;
  return true;
}

bool transfers_bounds(const Algebra& a, const EndoMap& f) {
  for (Element x = 0; x < a.size(); ++x)
    for (Element y = 0; y < a.size(); ++y)
      for (Element z = 0; z < a.size(); ++z)
        if (a.leq(x, a.imp(y, z)) && !a.leq(f(x), a.imp(f(y), f(z)))) return false;
  return true;
}

bool is_locally_principal(const Algebra& a, const EndoMap& f) {
  for (Element x = 0; x < a.size(); ++x) {
    bool found = false;
    for (Element p = 0; p < a.size() && !found; ++p) found = a.imp(p, x) == f(x);
    if (!found) return false;
  }
  return true;
}

bool preserves_compatible_meets(const Algebra& a, const EndoMap& f) {
  for (Element x = 0; x < a.size(); ++x) {
    for (Element y = 0; y < a.size(); ++y) {
      auto m = compatible_meet(a, x, y);
      if (!m) continue;
      auto fm = compatible_meet(a, f(x), f(y));
      if (!fm || *fm != f(*m)) return false;
    }
  }
  return true;
}

ElementSet kernel(const Algebra& a, const EndoMap& f) {
  ElementSet k;
  for (Element x = 0; x < a.size(); ++x)
    if (f(x) == a.one()) k.insert(x);
  return k;
}

ElementSet fixpoints(const Algebra& a, const EndoMap& f) {
  ElementSet s;
  for (Element x = 0; x < a.size(); ++x)
    if (f(x) == x) s.insert(x);
  return s;
}

std::vector<EndoMap> closure_endomorphisms(const Algebra& a) {
  std::vector<EndoMap> out;
  for (auto& f : multipliers(a))
    if (is_isotone(a, f)) out.push_back(std::move(f));
  return out;
}

std::vector<EndoMap> closure_endomorphisms_via_filters(const Algebra& a) {
  std::vector<EndoMap> out;
  for (ElementSet j : all_filters(a).carrier)
    if (is_monomial(a, j)) out.push_back(ce_from_monomial_filter(a, j));
  std::sort(out.begin(), out.end());
  return out;
}

int CeLattice::index_of(const EndoMap& f) const {
  auto it = std::lower_bound(carrier.begin(), carrier.end(), f);
  return (it != carrier.end() && *it == f) ? static_cast<int>(it - carrier.begin()) : -1;
}

CeLattice all_ce(const Algebra& a) {
  CeLattice ce;
  ce.carrier = closure_endomorphisms(a);
  const int k = ce.size();
  auto index = [&](const EndoMap& f, const char* op) {
    const int i = ce.index_of(f);
    if (i < 0) throw InvariantViolation(std::string("CE not closed under ") + op + ": " + format_map(a, f));
    return i;
  };
  ce.eps = index(eps(a), "identity");
  ce.iota = index(iota(a), "unit map");
  ce.join.assign(k, std::vector<int>(k));
  ce.meet.assign(k, std::vector<int>(k));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      ce.join[i][j] = index(compose(ce.carrier[i], ce.carrier[j]), "composition");
      ce.meet[i][j] = index(pointwise_meet(a, ce.carrier[i], ce.carrier[j]), "pointwise meet");
    }
  }
  ce.lattice = FiniteLattice::from_order(
      Poset::from_relation(k, [&](int i, int j) { return pointwise_leq(a, ce.carrier[i], ce.carrier[j]); }));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (ce.lattice.join(i, j) != ce.join[i][j]) throw InvariantViolation("composition is not the join in CE");
      if (ce.lattice.meet(i, j) != ce.meet[i][j]) throw InvariantViolation("pointwise meet is not the meet in CE");
    }
  }
  if (ce.lattice.bottom() != ce.eps || ce.lattice.top() != ce.iota) throw InvariantViolation("CE bounds are not eps, iota");
  if (!ce.lattice.is_distributive()) throw InvariantViolation("CE is not distributive");
  return ce;
}

EndoMap ce_from_monomial_filter(const Algebra& a, ElementSet j) {
  if (!is_filter(a, j)) throw DomainError(format_set(a, j) + " is not a filter", {});
  std::vector<Element> img(a.size());
  for (Element x = 0; x < a.size(); ++x) {
    auto m = monomial_max(a, j, x);
    if (!m) {
      throw DomainError("filter " + format_set(a, j) + " is not monomial: class " + format_set(a, class_of(a, j, x)) +
                            " of " + a.label(x) + " has no greatest element",
                        {x});
    }
    img[x] = *m;
  }
  return EndoMap(std::move(img));
}

std::optional<std::pair<Element, Element>> specialness_violation(const Algebra& a, ElementSet s) {
  for (Element x = 0; x < a.size(); ++x) {
    for (Element b : s) {
      bool found = false;
      for (Element p = 0; p < a.size() && !found; ++p) found = s.contains(a.imp(p, x)) && a.imp(p, b) == b;
      if (!found) return std::pair{x, b};
    }
  }
  return std::nullopt;
}

bool is_special(const Algebra& a, ElementSet s) { return !specialness_violation(a, s).has_value(); }

ElementSet upset_in(const Algebra& a, ElementSet s, Element x) { return s & a.up(x); }

ElementSet translates_in(const Algebra& a, ElementSet s, Element x) {
  ElementSet out;
  for (Element y = 0; y < a.size(); ++y)
    if (s.contains(a.imp(y, x))) out.insert(a.imp(y, x));
  return out;
}

bool is_closure_retract(const Algebra& a, ElementSet r) {
  for (Element x = 0; x < a.size(); ++x)
    if (!minimum(a, upset_in(a, r, x))) return false;
  return true;
}

EndoMap ce_from_retract(const Algebra& a, ElementSet r) {
  if (auto v = specialness_violation(a, r)) {
    throw DomainError(format_set(a, r) + " is not special at (" + a.label(v->first) + "," + a.label(v->second) + ")",
                      {v->first, v->second});
  }
  std::vector<Element> img(a.size());
  for (Element x = 0; x < a.size(); ++x) {
    auto m = minimum(a, upset_in(a, r, x));
    if (!m) throw DomainError(format_set(a, r) + " is not a closure retract: no least element above " + a.label(x), {x});
    img[x] = *m;
  }
  return EndoMap(std::move(img));
}

ElementSet nabla(const Algebra& a, ElementSet s, ElementSet t) {
  ElementSet out;
  for (Element x : s)
    for (Element y : t)
      if (auto m = compatible_meet(a, x, y)) out.insert(*m);
  return out;
}

namespace {

std::string phi_str(const Algebra& a, const EndoMap& f) { return "phi=" + format_map(a, f); }
std::string pair_str(const Algebra& a, const EndoMap& f, const EndoMap& g) {
  return "phi=" + format_map(a, f) + " psi=" + format_map(a, g);
}

std::vector<ElementSet> all_subsets(int n) {
  std::vector<ElementSet> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) out.emplace_back(bits);
  return out;
}

constexpr int kAllMapsLimit = 6;

}  // namespace

VerificationReport check_ce_structure(const Algebra& a) {
  VerificationReport report;
  const auto ce = closure_endomorphisms(a);

  {
    Check c("ce/closed-and-distributive");
    try {
      all_ce(a);
    } catch (const InvariantViolation& e) {
      c.fail(e.what());
    }
    report.add(c.finish());
  }
  {
    Check c("ce/two-routes-agree");
    std::vector<EndoMap> via;
    try {
      via = closure_endomorphisms_via_filters(a);
    } catch (const DomainError& e) {
      c.fail(e.what());
    }
    c.expect(via == ce, [&] {
      return "isotone multipliers: " + std::to_string(ce.size()) + ", via monomial filters: " + std::to_string(via.size());
    });
    report.add(c.finish());
  }
  {
    Check c("ce/equivalent-characterizations");
    if (a.size() <= kAllMapsLimit) {
      for_each_map(a.size(), [&](const EndoMap& f) {
        const bool ce_member = is_closure_endomorphism(a, f);
        const bool mult = is_multiplier(a, f);
        const bool endo = is_endomorphism(a, f);
        const bool cls = satisfies_closure_identity(a, f);
        const bool isotone_mult = mult && is_isotone(a, f);
        const bool two_of_three_a = mult && endo;
        const bool two_of_three_b = mult && cls;
        const bool two_of_three_c = endo && cls;
        const bool bounds_local = transfers_bounds(a, f) && is_locally_principal(a, f);
        const bool agree = ce_member == isotone_mult && ce_member == two_of_three_a && ce_member == two_of_three_b &&
                           ce_member == two_of_three_c && ce_member == bounds_local;
        c.expect(agree, [&] { return "map=" + format_map(a, f); });
      });
    } else {
      c.skip("exhaustive over n^n maps only for n <= " + std::to_string(kAllMapsLimit));
    }
    report.add(c.finish());
  }
  {
    Check c("ce/members-preserve-order-and-meets");
    Check r("ce/fixpoints-relative-subsemilattice");
    for (const auto& f : ce) {
      c.expect(is_isotone(a, f) && is_endomorphism(a, f) && transfers_bounds(a, f) && preserves_compatible_meets(a, f),
               [&] { return phi_str(a, f); });
      r.expect(is_relative_subsemilattice(a, fixpoints(a, f)), [&] { return phi_str(a, f); });
    }
    report.add(c.finish());
    report.add(r.finish());
  }
  {
    Check c("ce/named-members");
    c.expect(is_closure_endomorphism(a, eps(a)), [] { return std::string("eps"); });
    c.expect(is_closure_endomorphism(a, iota(a)), [] { return std::string("iota"); });
    for (Element p = 0; p < a.size(); ++p) {
      c.expect(is_closure_endomorphism(a, alpha(a, p)), [&] { return "alpha_" + a.label(p); });
      c.expect(is_closure_endomorphism(a, beta(a, p)), [&] { return "beta_" + a.label(p); });
      c.expect(kernel(a, alpha(a, p)) == principal_filter(a, p), [&] { return "kernel(alpha_" + a.label(p) + ") != [p)"; });
    }
    report.add(c.finish());
  }
  {
    Check c("ce/order-characterization");
    for (const auto& f : ce) {
      for (const auto& g : ce) {
        const bool le = pointwise_leq(a, f, g);
        const bool ok = le == (compose(f, g) == g) && le == kernel(a, f).subset_of(kernel(a, g)) &&
                        le == fixpoints(a, g).subset_of(fixpoints(a, f));
        c.expect(ok, [&] { return pair_str(a, f, g); });
      }
    }
    report.add(c.finish());
  }
  return report;
}

VerificationReport check_isotmult2(const Algebra& a) {
  Check c("isotmult2/isotone-iff-filter-kernel-iff-special-fixpoints");
  for (const auto& f : multipliers(a)) {
    const bool iso = is_isotone(a, f);
    const bool filter_kernel = is_filter(a, kernel(a, f));
    const bool special = is_special(a, fixpoints(a, f));
    c.expect(iso == filter_kernel && iso == special, [&] {
      return phi_str(a, f) + " isotone=" + std::to_string(iso) + " kernel-filter=" + std::to_string(filter_kernel) +
             " special=" + std::to_string(special);
    });
  }
  VerificationReport report;
  report.add(c.finish());
  return report;
}

VerificationReport check_idempotent_lemma(const Algebra& a) {
  const auto endos = endomorphisms(a);
  std::vector<EndoMap> idempotents;
  for (const auto& t : endos)
    if (is_idempotent(t)) idempotents.push_back(t);

  Check c("idempotent-lemma/closure-iff-idempotent-composites");
  for (const auto& f : endos) {
    const bool closure = is_closure_endomorphism(a, f);
    std::optional<EndoMap> breaker;
    for (const auto& t : idempotents) {
      if (!is_idempotent(compose(t, f))) {
        breaker = t;
        break;
      }
    }
    c.expect(closure == !breaker.has_value(), [&] {
      return phi_str(a, f) + " closure=" + std::to_string(closure) +
             (breaker ? " tau=" + format_map(a, *breaker) : std::string(" no tau breaks it"));
    });
  }
  VerificationReport report;
  report.add(c.finish());
  return report;
}

CheckResult check_monomial_roundtrip(const Algebra& a, std::span<const ElementSet> candidates) {
  Check c("kappa/inverse-roundtrip");
  std::vector<std::string> skipped;
  for (ElementSet j : candidates) {
    try {
      const EndoMap f = ce_from_monomial_filter(a, j);
      c.expect(is_closure_endomorphism(a, f) && kernel(a, f) == j,
               [&] { return "J=" + format_set(a, j) + " gives " + format_map(a, f); });
      for (Element x = 0; x < a.size(); ++x) {
        c.expect(maximum(a, lower_set(a, j, x)) == f(x),
                 [&] { return "J=" + format_set(a, j) + " max J_a differs at a=" + a.label(x); });
      }
    } catch (const DomainError& e) {
      skipped.emplace_back(e.what());
    }
  }
  if (!skipped.empty()) {
    std::string reason = skipped.front();
    if (skipped.size() > 1) reason += " (+" + std::to_string(skipped.size() - 1) + " more)";
    c.skip(reason);
  }
  return c.finish();
}

VerificationReport check_kappa(const Algebra& a) {
  VerificationReport report;
  const auto ce = closure_endomorphisms(a);
  const auto filters = all_filters(a).carrier;

  {
    Check c("kappa/kernel-is-filter");
    for (const auto& f : ce) c.expect(is_filter(a, kernel(a, f)), [&] { return phi_str(a, f); });
    report.add(c.finish());
  }
  {
    Check c("kappa/bounds");
    c.expect(kernel(a, eps(a)) == ElementSet::singleton(a.one()), [] { return std::string("K_eps != {1}"); });
    c.expect(kernel(a, iota(a)) == a.universe(), [] { return std::string("K_iota != A"); });
    report.add(c.finish());
  }
  {
    Check m("kappa/meet-to-intersection");
    Check j("kappa/composition-to-filter-join");
    Check inj("kappa/injective");
    for (const auto& f : ce) {
      for (const auto& g : ce) {
        const ElementSet kf = kernel(a, f), kg = kernel(a, g);
        m.expect(kernel(a, pointwise_meet(a, f, g)) == (kf & kg), [&] { return pair_str(a, f, g); });
        j.expect(kernel(a, compose(f, g)) == filter_join(a, kf, kg), [&] { return pair_str(a, f, g); });
        inj.expect(f == g || kf != kg, [&] { return pair_str(a, f, g); });
      }
    }
    report.add(m.finish());
    report.add(j.finish());
    report.add(inj.finish());
  }
  {
    Check c("kappa/range-is-monomial-filters");
    std::set<ElementSet> range, monomial;
    for (const auto& f : ce) range.insert(kernel(a, f));
    for (ElementSet j : filters)
      if (is_monomial(a, j)) monomial.insert(j);
    c.expect(range == monomial, [&] {
      return std::to_string(range.size()) + " kernels vs " + std::to_string(monomial.size()) + " monomial filters";
    });
    report.add(c.finish());
  }
  {
    Check c("kappa/value-is-class-maximum");
    for (const auto& f : ce) {
      const ElementSet k = kernel(a, f);
      for (Element x = 0; x < a.size(); ++x) {
        c.expect(monomial_max(a, k, x) == f(x) && maximum(a, lower_set(a, k, x)) == f(x),
                 [&] { return phi_str(a, f) + " a=" + a.label(x); });
      }
    }
    report.add(c.finish());
  }
  report.add(check_monomial_roundtrip(a, filters));
  {
    Check c("kappa/finite-bijection");
    c.expect(ce.size() == filters.size(), [&] {
      return "|CE|=" + std::to_string(ce.size()) + " |filters|=" + std::to_string(filters.size());
    });
    report.add(c.finish());
  }
  return report;
}

VerificationReport check_ff(const Algebra& a) {
  VerificationReport report;
  const auto ce = closure_endomorphisms(a);

  {
    Check c("ff/fixpoints-special-closure-retract-subalgebra");
    for (const auto& f : ce) {
      const ElementSet fix = fixpoints(a, f);
      c.expect(is_closure_retract(a, fix) && is_subalgebra(a, fix) && is_special(a, fix),
               [&] { return phi_str(a, f); });
    }
    report.add(c.finish());
  }
  {
    Check c("ff/bounds");
    c.expect(fixpoints(a, eps(a)) == a.universe(), [] { return std::string("F_eps != A"); });
    c.expect(fixpoints(a, iota(a)) == ElementSet::singleton(a.one()), [] { return std::string("F_iota != {1}"); });
    report.add(c.finish());
  }
  {
    Check comp("ff/composition-to-intersection");
    Check meet("ff/meet-to-nabla");
    Check emb("ff/dual-order-embedding");
    for (const auto& f : ce) {
      for (const auto& g : ce) {
        const ElementSet ff = fixpoints(a, f), fg = fixpoints(a, g);
        comp.expect(fixpoints(a, compose(f, g)) == (ff & fg), [&] { return pair_str(a, f, g); });
        meet.expect(fixpoints(a, pointwise_meet(a, f, g)) == nabla(a, ff, fg), [&] { return pair_str(a, f, g); });
        emb.expect(pointwise_leq(a, f, g) == fg.subset_of(ff) && (f == g || ff != fg), [&] { return pair_str(a, f, g); });
      }
    }
    report.add(comp.finish());
    report.add(meet.finish());
    report.add(emb.finish());
  }

  std::vector<ElementSet> retracts;
  for (ElementSet s : all_subsets(a.size()))
    if (is_special(a, s) && is_closure_retract(a, s)) retracts.push_back(s);
  {
    Check c("ff/range-is-special-closure-retracts");
    std::set<ElementSet> range;
    for (const auto& f : ce) range.insert(fixpoints(a, f));
    c.expect(range == std::set<ElementSet>(retracts.begin(), retracts.end()), [&] {
      return std::to_string(range.size()) + " fixpoint sets vs " + std::to_string(retracts.size()) + " retracts";
    });
    report.add(c.finish());
  }
  {
    Check c("ff/value-is-upset-minimum");
    Check inv("ff/inverse-roundtrip");
    for (const auto& f : ce) {
      const ElementSet r = fixpoints(a, f);
      for (Element x = 0; x < a.size(); ++x) {
        c.expect(minimum(a, upset_in(a, r, x)) == f(x) && minimum(a, translates_in(a, r, x)) == f(x),
                 [&] { return phi_str(a, f) + " a=" + a.label(x); });
      }
      inv.expect(ce_from_retract(a, r) == f, [&] { return phi_str(a, f); });
    }
    report.add(c.finish());
    report.add(inv.finish());
  }
  {
    Check c("ff/special-sets-alpha-closed");
    for (ElementSet s : all_subsets(a.size()))
      if (is_special(a, s)) c.expect(is_alpha_closed(a, s) && (s.empty() || is_subalgebra(a, s)), [&] { return format_set(a, s); });
    report.add(c.finish());
  }
  {
    Check c("ff/kappa-consistency");
    for (const auto& f : ce)
      c.expect(fixpoints(a, ce_from_monomial_filter(a, kernel(a, f))) == fixpoints(a, f), [&] { return phi_str(a, f); });
    report.add(c.finish());
  }
  {
    // Monomial filters form a sublattice of the filter lattice, and J ↦ F
    // of the closure endomorphism with kernel J is an anti-isomorphism onto
    // the lattice (special closure retracts, ∩, ∇).
    Check sub("ff/monomial-filters-sublattice");
    Check dual("ff/monomial-dual-to-retracts");
    std::vector<ElementSet> monomial;
    for (ElementSet j : all_filters(a).carrier)
      if (is_monomial(a, j)) monomial.push_back(j);
    std::set<ElementSet> mset(monomial.begin(), monomial.end());
    std::set<ElementSet> rset(retracts.begin(), retracts.end());
    std::vector<ElementSet> image;
    for (ElementSet j : monomial) image.push_back(fixpoints(a, ce_from_monomial_filter(a, j)));
    dual.expect(std::set<ElementSet>(image.begin(), image.end()) == rset && image.size() == retracts.size(),
                [] { return std::string("J -> F is not a bijection onto special closure retracts"); });
    for (std::size_t i = 0; i < monomial.size(); ++i) {
      for (std::size_t k = 0; k < monomial.size(); ++k) {
        const ElementSet j1 = monomial[i], j2 = monomial[k];
        const ElementSet meet = j1 & j2, join = filter_join(a, j1, j2);
        sub.expect(mset.count(meet) && mset.count(join), [&] { return format_set(a, j1) + " " + format_set(a, j2); });
        auto image_of = [&](ElementSet j) { return fixpoints(a, ce_from_monomial_filter(a, j)); };
        dual.expect(j1.subset_of(j2) == image[k].subset_of(image[i]) && image_of(join) == (image[i] & image[k]) &&
                        (!mset.count(meet) || image_of(meet) == nabla(a, image[i], image[k])),
                    [&] { return format_set(a, j1) + " " + format_set(a, j2); });
      }
    }
    try {
      auto ml = FiniteLattice::from_order(Poset::from_relation(
          static_cast<int>(monomial.size()), [&](int x, int y) { return monomial[x].subset_of(monomial[y]); }));
      auto rl = FiniteLattice::from_order(Poset::from_relation(
          static_cast<int>(retracts.size()), [&](int x, int y) { return retracts[x].subset_of(retracts[y]); }));
      for (int x = 0; x < rl.size(); ++x) {
        for (int y = 0; y < rl.size(); ++y) {
          dual.expect(retracts[rl.meet(x, y)] == (retracts[x] & retracts[y]) &&
                          retracts[rl.join(x, y)] == nabla(a, retracts[x], retracts[y]),
                      [&] { return "retract lattice ops differ from (cap, nabla) at " + format_set(a, retracts[x]) + " " +
                                   format_set(a, retracts[y]); });
        }
      }
      dual.expect(order_isomorphism(ml.order(), rl.order().dual()).has_value(),
                  [] { return std::string("no anti-isomorphism between monomial filters and retracts"); });
    } catch (const InvariantViolation& e) {
      dual.fail(e.what());
    }
    report.add(sub.finish());
    report.add(dual.finish());
  }
  return report;
}

VerificationReport implication_extras(const Algebra& a) {
  if (!classify(a).implication_algebra) throw PreconditionError("not an implication algebra");
  VerificationReport report;
  const auto ce = closure_endomorphisms(a);
  const auto ms = multipliers(a);

  {
    Check c("impla/ce-equals-multipliers");
    c.expect(ce == ms, [&] { return "|CE|=" + std::to_string(ce.size()) + " |M|=" + std::to_string(ms.size()); });
    report.add(c.finish());
  }
  auto join = [&](Element x, Element y) {
    auto j = partial_join(a, x, y);
    if (!j) throw InvariantViolation("missing join in an implication algebra");
    return *j;
  };
  {
    Check c("impla/joins-preserved");
    for (const auto& f : ce)
      for (Element x = 0; x < a.size(); ++x)
        for (Element y = 0; y < a.size(); ++y) {
          const Element v = f(join(x, y));
          c.expect(v == join(f(x), f(y)) && v == join(x, f(y)) && v == join(f(x), y),
                   [&] { return phi_str(a, f) + " x=" + a.label(x) + " y=" + a.label(y); });
        }
    report.add(c.finish());
  }
  {
    Check c("impla/pointwise-join");
    for (const auto& f : ce)
      for (const auto& g : ce) c.expect(compose(f, g) == pointwise_join(a, f, g), [&] { return pair_str(a, f, g); });
    report.add(c.finish());
  }
  {
    Check c("impla/fixpoints-are-filters");
    for (const auto& f : ce) c.expect(is_filter(a, fixpoints(a, f)), [&] { return phi_str(a, f); });
    report.add(c.finish());
  }
  {
    Check c("impla/principal-heredity");
    for (const auto& f : ce)
      for (Element p = 0; p < a.size(); ++p)
        if (pointwise_leq(a, f, alpha(a, p)))
          c.expect(f == alpha(a, a.imp(f(p), p)), [&] { return phi_str(a, f) + " p=" + a.label(p); });
    report.add(c.finish());
  }
  auto complement = [&](const EndoMap& f) {
    std::vector<Element> img(a.size());
    for (Element x = 0; x < a.size(); ++x) img[x] = a.imp(f(x), x);
    return EndoMap(std::move(img));
  };
  {
    Check c("impla/boolean-complement");
    for (const auto& f : ce) {
      const EndoMap g = complement(f);
      c.expect(g == pointwise_imp(a, f, eps(a)) && std::binary_search(ce.begin(), ce.end(), g) &&
                   pointwise_meet(a, f, g) == eps(a) && compose(f, g) == iota(a) && fixpoints(a, f) == kernel(a, g),
               [&] { return phi_str(a, f); });
    }
    report.add(c.finish());
  }
  {
    Check c("impla/delta-embedding");
    for (Element p = 0; p < a.size(); ++p) {
      const EndoMap d = delta(a, p);
      bool ok = std::binary_search(ce.begin(), ce.end(), d) && d == complement(alpha(a, p));
      for (Element x = 0; x < a.size(); ++x) ok = ok && d(x) == join(p, x);
      c.expect(ok, [&] { return "delta_" + a.label(p); });
      for (Element q = 0; q < a.size(); ++q) {
        c.expect(delta(a, a.imp(p, q)) == pointwise_imp(a, d, delta(a, q)) && (p == q || d != delta(a, q)),
                 [&] { return "p=" + a.label(p) + " q=" + a.label(q); });
      }
    }
    report.add(c.finish());
  }
  {
    Check c("impla/delta-upward-closed");
    for (const auto& f : ce)
      for (Element p = 0; p < a.size(); ++p)
        if (pointwise_leq(a, delta(a, p), f)) {
          bool found = false;
          for (Element q = 0; q < a.size() && !found; ++q) found = f == delta(a, q);
          c.expect(found, [&] { return phi_str(a, f) + " above delta_" + a.label(p); });
        }
    report.add(c.finish());
  }
  {
    Check emb("impla/fixpoints-embed-into-dual-filter-lattice");
    Check dual("impla/kernels-and-fixpoints-dual-boolean");
    for (const auto& f : ce) {
      const ElementSet kf = kernel(a, f), ff = fixpoints(a, f);
      dual.expect((kf & ff) == ElementSet::singleton(a.one()) && filter_join(a, kf, ff) == a.universe(),
                  [&] { return phi_str(a, f); });
      for (const auto& g : ce) {
        const ElementSet fg = fixpoints(a, g);
        emb.expect(fixpoints(a, pointwise_meet(a, f, g)) == filter_join(a, ff, fg) &&
                       fixpoints(a, compose(f, g)) == (ff & fg) && (f == g || ff != fg),
                   [&] { return pair_str(a, f, g); });
        dual.expect(kf.subset_of(kernel(a, g)) == fg.subset_of(ff), [&] { return pair_str(a, f, g); });
      }
    }
    auto boolean_family = [&](auto project) {
      std::vector<ElementSet> sets;
      for (const auto& f : ce) sets.push_back(project(f));
      std::sort(sets.begin(), sets.end());
      auto l = FiniteLattice::from_order(Poset::from_relation(static_cast<int>(sets.size()),
                                                              [&](int x, int y) { return sets[x].subset_of(sets[y]); }));
      return l;
    };
    auto kl = boolean_family([&](const EndoMap& f) { return kernel(a, f); });
    auto fl = boolean_family([&](const EndoMap& f) { return fixpoints(a, f); });
    dual.expect(kl.is_boolean() && fl.is_boolean() && order_isomorphism(kl.order(), fl.order().dual()).has_value(),
                [] { return std::string("kernel and fixpoint lattices are not dual Boolean lattices"); });
    report.add(emb.finish());
    report.add(dual.finish());
  }
  {
    Check c("impla/bounded-monomial-filters-principal");
    for (ElementSet j : all_filters(a).carrier) {
      if (!is_monomial(a, j)) continue;
      ElementSet lower = a.universe();
      for (Element x : j) lower &= a.down(x);
      if (lower.empty()) continue;
      bool principal = false;
      for (Element p = 0; p < a.size() && !principal; ++p) principal = principal_filter(a, p) == j;
      c.expect(principal, [&] { return "J=" + format_set(a, j); });
    }
    report.add(c.finish());
  }
  return report;
}

VerificationReport check_fixpoint_filter_characterization(const Algebra& a) {
  auto all_filters_fixed = [&](const std::vector<EndoMap>& maps) {
    return std::all_of(maps.begin(), maps.end(), [&](const EndoMap& f) { return is_filter(a, fixpoints(a, f)); });
  };
  const bool implication = classify(a).implication_algebra;
  const bool over_ce = all_filters_fixed(closure_endomorphisms(a));
  const bool over_cef = all_filters_fixed(finitely_generated_ces(a));
  const bool over_cea = all_filters_fixed(principal_ces(a));

  Check c("fixpoint-characterization/four-way");
  c.expect(implication == over_ce && implication == over_cef && implication == over_cea, [&] {
    return "implication=" + std::to_string(implication) + " CE=" + std::to_string(over_ce) +
           " CEf=" + std::to_string(over_cef) + " CEalpha=" + std::to_string(over_cea);
  });
  VerificationReport report;
  report.add(c.finish());
  return report;
}

}  // namespace hilbert
