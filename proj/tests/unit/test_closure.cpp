#include <doctest.h>

#include "fixtures.hpp"
#include "hilbert/closure.hpp"
#include "hilbert/enumeration.hpp"
#include "hilbert/errors.hpp"
#include "hilbert/multipliers.hpp"

using namespace hilbert;

namespace {

// Oracle: endomorphism, extensive, isotone, idempotent, straight off the
// definitions and the raw table.
bool oracle_closure_endo(const Algebra& a, const EndoMap& f) {
  const int n = a.size();
  for (Element x = 0; x < n; ++x) {
    if (a.imp(x, f(x)) != a.one()) return false;
    if (f(f(x)) != f(x)) return false;
    for (Element y = 0; y < n; ++y) {
      if (f(a.imp(x, y)) != a.imp(f(x), f(y))) return false;
      if (a.imp(x, y) == a.one() && a.imp(f(x), f(y)) != a.one()) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("closure endomorphisms of the fixtures") {
  CHECK(closure_endomorphisms(fixtures::singleton()).size() == 1);
  CHECK(closure_endomorphisms(fixtures::two_chain()).size() == 2);

  const auto c = fixtures::a3c();
  const auto ce = closure_endomorphisms(c);
  REQUIRE(ce.size() == 3);
  CHECK(ce == std::vector<EndoMap>{eps(c), alpha(c, 1), iota(c)});

  const auto i = fixtures::a3i();
  const auto cei = closure_endomorphisms(i);
  REQUIRE(cei.size() == 4);
  CHECK(kernel(i, alpha(i, 0)) == (ElementSet{0, 2}));
  CHECK(fixpoints(i, alpha(i, 0)) == (ElementSet{1, 2}));
  CHECK(fixpoints(i, alpha(i, 0)) == kernel(i, alpha(i, 1)));
}

TEST_CASE("isotone multipliers match the oracle up to size 5") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& e : enumerate_algebras(n).entries) {
      std::vector<EndoMap> expected;
      for_each_map(n, [&](const EndoMap& f) {
        if (oracle_closure_endo(e.algebra, f)) expected.push_back(f);
      });
      CHECK(closure_endomorphisms(e.algebra) == expected);
      CHECK(closure_endomorphisms_via_filters(e.algebra) == expected);
    }
}

TEST_CASE("CE lattice of A3i is a diamond") {
  const auto ce = all_ce(fixtures::a3i());
  CHECK(ce.size() == 4);
  CHECK(ce.lattice.is_boolean());
  CHECK(ce.lattice.bottom() == ce.eps);
  CHECK(ce.lattice.top() == ce.iota);
}

TEST_CASE("monomial filter inverse rejects non-filters with a domain error") {
  const auto c = fixtures::a3c();
  CHECK(ce_from_monomial_filter(c, ElementSet{1, 2}) == alpha(c, 1));
  CHECK_THROWS_AS(ce_from_monomial_filter(c, ElementSet{0}), DomainError);
}

TEST_CASE("injected invalid candidate is skipped with its reason") {
  const auto c = fixtures::a3c();
  const std::vector<ElementSet> candidates{ElementSet{1, 2}, ElementSet{0}};
  const auto r = check_monomial_roundtrip(c, candidates);
  CHECK(r.status == Status::skipped);
  CHECK(r.reason.find("not a filter") != std::string::npos);
  CHECK(r.witnesses.empty());
}

TEST_CASE("special sets and retracts") {
  const auto i = fixtures::a3i();
  CHECK(is_special(i, ElementSet{1, 2}));
  CHECK(is_closure_retract(i, ElementSet{1, 2}));
  CHECK(ce_from_retract(i, ElementSet{1, 2}) == alpha(i, 0));
  CHECK(upset_in(i, ElementSet{1, 2}, 0) == ElementSet::singleton(2));
  CHECK(translates_in(i, ElementSet{1, 2}, 1) == (ElementSet{1, 2}));

  const auto c = fixtures::a3c();
  // {a,1}: only p = 1 fixes a, and 1 -> 0 = 0 falls outside.
  const auto v = specialness_violation(c, ElementSet{1, 2});
  REQUIRE(v.has_value());
  CHECK(*v == std::pair<Element, Element>{0, 1});
  CHECK(is_special(c, ElementSet{0, 2}));
  try {
    ce_from_retract(c, ElementSet{1, 2});
    FAIL("expected DomainError");
  } catch (const DomainError& e) {
    CHECK(e.witness() == std::vector<Element>{v->first, v->second});
  }
}

TEST_CASE("nabla skips incompatible pairs") {
  const auto i = fixtures::a3i();
  CHECK(nabla(i, ElementSet{0, 2}, ElementSet{1, 2}) == i.universe());
  CHECK(nabla(i, ElementSet::singleton(0), ElementSet::singleton(1)).empty());
}

TEST_CASE("all closure checks pass on the fixtures") {
  for (const Algebra& a : {fixtures::singleton(), fixtures::two_chain(), fixtures::a3c(), fixtures::a3i(),
                           fixtures::boolean4()}) {
    CHECK(check_ce_structure(a).passed());
    CHECK(check_isotmult2(a).passed());
    CHECK(check_idempotent_lemma(a).passed());
    CHECK(check_kappa(a).passed());
    CHECK(check_ff(a).passed());
    CHECK(check_fixpoint_filter_characterization(a).passed());
  }
  CHECK(implication_extras(fixtures::a3i()).passed());
  CHECK_THROWS_AS(implication_extras(fixtures::a3c()), PreconditionError);
}
