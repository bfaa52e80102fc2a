#include <doctest.h>

#include "fixtures.hpp"
#include "hilbert/errors.hpp"

using namespace hilbert;

TEST_CASE("validator accepts the small fixtures") {
  CHECK(validate_hilbert({{0}}, 0).valid());
  CHECK(validate_hilbert({{1, 1}, {0, 1}}, 1).valid());
  CHECK(fixtures::a3c().size() == 3);
  CHECK(fixtures::a3i().size() == 3);
  CHECK(fixtures::boolean4().size() == 4);
}

TEST_CASE("chain with a -> 0 = a fails exchange at (a,a,0) only") {
  const auto r = validate_hilbert({{2, 2, 2}, {1, 2, 2}, {0, 1, 2}}, 2);
  REQUIRE_FALSE(r.valid());
  REQUIRE(r.violations.size() == 1);
  CHECK(r.violations[0].axiom == "exchange");
  CHECK(r.violations[0].instance == std::vector<Element>{1, 1, 0});
}

TEST_CASE("malformed tables are input errors, not violations") {
  CHECK_THROWS_AS(validate_hilbert({{1, 7}, {0, 1}}, 1), MalformedInput);
  CHECK_THROWS_AS(validate_hilbert({{1, 1}, {0}}, 1), MalformedInput);
  CHECK_THROWS_AS(validate_hilbert({{0}}, 3), MalformedInput);
  CHECK_THROWS_AS(validate_hilbert(std::vector<std::vector<Element>>{}, 0), MalformedInput);
}

TEST_CASE("validator reports every failing instance") {
  // Constant table: x -> y = 0 with unit 1 breaks reflexivity everywhere.
  const auto r = validate_hilbert({{0, 0}, {0, 0}}, 1);
  REQUIRE_FALSE(r.valid());
  int reflexive = 0;
  for (const auto& v : r.violations) reflexive += v.axiom == "order-reflexive";
  CHECK(reflexive == 2);
}

TEST_CASE("natural order") {
  const auto c = fixtures::two_chain();
  CHECK(c.leq(0, 1));
  CHECK_FALSE(c.leq(1, 0));
  const auto i = fixtures::a3i();
  CHECK_FALSE(i.leq(0, 1));
  CHECK_FALSE(i.leq(1, 0));
  CHECK(i.leq(0, 2));
  for (const Algebra& a : {fixtures::a3c(), fixtures::a3i(), fixtures::boolean4()}) {
    const auto o = natural_order(a);
    CHECK(o.is_partial_order());
    CHECK(o.greatest() == a.one());
    for (Element x = 0; x < a.size(); ++x) CHECK(a.leq(a.one(), x) == (x == a.one()));
  }
}

TEST_CASE("partial meets and joins") {
  const auto c = fixtures::a3c();
  CHECK(partial_meet(c, 1, 2) == 1);
  CHECK(partial_join(c, 0, 1) == 1);
  const auto i = fixtures::a3i();
  CHECK(partial_join(i, 0, 1) == 2);
  CHECK_FALSE(partial_meet(i, 0, 1).has_value());
}

TEST_CASE("compatibility") {
  const auto c = fixtures::a3c();
  for (Element x = 0; x < 3; ++x) CHECK(compatible_meet(c, x, c.one()) == x);
  CHECK(is_compatible(c, 0, 1));
  CHECK(compatible_meet(c, 0, 1) == 0);
  CHECK_FALSE(is_compatible(fixtures::a3i(), 0, 1));
}

TEST_CASE("subalgebras and relative subsemilattices") {
  const auto c = fixtures::a3c();
  const ElementSet unit = ElementSet::singleton(c.one());
  CHECK(is_subalgebra(c, unit));
  CHECK(is_relative_subsemilattice(c, unit));
  CHECK(is_subalgebra(c, c.universe()));
  CHECK(is_relative_subsemilattice(c, ElementSet{0, 2}));
  CHECK(subalgebra_generated(c, ElementSet{1}) == (ElementSet{1, 2}));
  // {} ∪ {1}, {a,1}, {0,1}, {0,a,1}
  CHECK(all_subalgebras(c).size() == 4);
}

TEST_CASE("blocks") {
  const auto i = fixtures::a3i();
  const ElementSet b = block_from(i, i.universe(), 0);
  CHECK(b == (ElementSet{0, 2}));
  CHECK(is_block(i, b));
  CHECK(block_from(i, ElementSet::singleton(2), 0) == ElementSet::singleton(0));
  CHECK_FALSE(is_block(i, ElementSet::singleton(0)));
  CHECK(is_block(i, ElementSet::singleton(2)));
}

TEST_CASE("classification") {
  const auto c = classify(fixtures::a3c());
  CHECK(c.implicative_semilattice);
  CHECK_FALSE(c.implication_algebra);
  const auto i = classify(fixtures::a3i());
  CHECK(i.implication_algebra);
  CHECK_FALSE(i.implicative_semilattice);
  const auto t = classify(fixtures::two_chain());
  CHECK(t.implication_algebra);
  CHECK(t.implicative_semilattice);
}

TEST_CASE("labels are carried and ignored by equality") {
  const auto c = fixtures::a3c();
  CHECK(c.label(1) == "a");
  CHECK(format_set(c, ElementSet{1, 2}) == "{a,1}");
  CHECK(c == c.with_labels({"x", "y", "z"}));
}
