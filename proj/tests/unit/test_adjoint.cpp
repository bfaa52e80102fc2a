#include <doctest.h>

#include "fixtures.hpp"
#include "hilbert/adjoint.hpp"
#include "hilbert/closure.hpp"
#include "hilbert/enumeration.hpp"
#include "hilbert/errors.hpp"
#include "hilbert/multipliers.hpp"

using namespace hilbert;

TEST_CASE("alpha over finite sets") {
  const auto i = fixtures::a3i();
  CHECK(alpha_set(i, ElementSet{}) == eps(i));
  CHECK(alpha_set(i, ElementSet::singleton(2)) == eps(i));
  CHECK(alpha_set(i, ElementSet{0, 1}) == iota(i));
}

TEST_CASE("finitely generated closure endomorphisms exhaust CE") {
  for (const Algebra& a : {fixtures::singleton(), fixtures::a3c(), fixtures::a3i(), fixtures::boolean4()})
    CHECK(finitely_generated_ces(a) == closure_endomorphisms(a));
}

TEST_CASE("subtraction") {
  const auto i = fixtures::a3i();
  const auto cef = finitely_generated_ces(i);
  // α_b − α_a = α_{a→b} = α_b
  CHECK(difference(i, alpha(i, 1), alpha(i, 0)) == alpha(i, 1));
  for (const auto& psi : cef) {
    CHECK(difference(i, cef, psi, eps(i)) == psi);
    CHECK(difference(i, cef, psi, iota(i)) == eps(i));
  }
  CHECK_THROWS_AS(difference(i, std::vector<EndoMap>{}, eps(i), eps(i)), InvariantViolation);
}

TEST_CASE("adjoint semilattice shapes") {
  const auto s1 = adjoint_semilattice(fixtures::singleton());
  CHECK(s1.size() == 1);
  const auto sc = adjoint_semilattice(fixtures::a3c());
  REQUIRE(sc.size() == 3);
  // A chain: every pair comparable.
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) CHECK((sc.order.leq[x][y] || sc.order.leq[y][x]));
  CHECK(sc.carrier[sc.bottom] == eps(fixtures::a3c()));
}

TEST_CASE("minimal Brouwerian extension") {
  const auto c = fixtures::a3c();
  const auto ec = minimal_brouwerian_extension(c);
  CHECK(ec.size() == 3);
  CHECK(are_isomorphic(ec.as_algebra(), c).has_value());

  const auto i = fixtures::a3i();
  const auto ei = minimal_brouwerian_extension(i);
  CHECK(ei.size() == 4);
  const Algebra x = ei.as_algebra();
  CHECK(classify(x).implicative_semilattice);
  for (Element p = 0; p < 3; ++p)
    for (Element q = 0; q < 3; ++q) CHECK(x.imp(ei.embedding[p], ei.embedding[q]) == ei.embedding[i.imp(p, q)]);

  CHECK(minimal_brouwerian_extension(fixtures::singleton()).size() == 1);
}

TEST_CASE("ideal lattice of the adjoint semilattice") {
  CHECK(ideal_lattice_of_adjoint(fixtures::singleton()).ideals.size() == 1);
  CHECK(ideal_lattice_of_adjoint(fixtures::a3c()).ideals.size() == 3);
  const auto li = ideal_lattice_of_adjoint(fixtures::a3i());
  CHECK(li.ideals.size() == 4);
  CHECK(li.lattice.is_boolean());
}

TEST_CASE("adjoint checks on the fixtures") {
  for (const Algebra& a : {fixtures::singleton(), fixtures::two_chain(), fixtures::a3c(), fixtures::a3i(),
                           fixtures::boolean4()}) {
    CHECK(check_join_density(a).passed());
    CHECK(check_kk2(a).passed());
    CHECK(check_compact_generation(a).passed());
    CHECK(check_brouwerian(a).passed());
    CHECK(check_filter_ideal_bridge(a).passed());
  }
  CHECK(check_impla3(fixtures::a3i()).passed());
  CHECK(check_impla3(fixtures::two_chain()).passed());
  CHECK_THROWS_AS(check_impla3(fixtures::a3c()), PreconditionError);
}
