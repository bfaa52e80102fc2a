#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "fixtures.hpp"
#include "hilbert/closure.hpp"
#include "hilbert/enumeration.hpp"
#include "hilbert/errors.hpp"
#include "hilbert/filters.hpp"
#include "hilbert/monoid.hpp"

using namespace hilbert;

TEST_CASE("catalog sizes for the smallest orders") {
  CHECK(enumerate_algebras(1).entries.size() == 1);
  CHECK(enumerate_algebras(2).entries.size() == 1);
  const auto three = enumerate_algebras(3);
  REQUIRE(three.entries.size() == 2);
  int chains = 0, implication = 0;
  for (const auto& e : three.entries) {
    chains += are_isomorphic(e.algebra, fixtures::a3c()).has_value();
    implication += are_isomorphic(e.algebra, fixtures::a3i()).has_value();
  }
  CHECK(chains == 1);
  CHECK(implication == 1);
  CHECK(three.entries[0].name == "A3_1");
}

TEST_CASE("bounds") {
  CHECK_THROWS_AS(enumerate_algebras(0), PreconditionError);
  EnumerationOptions small;
  small.bound = 3;
  CHECK_THROWS_AS(enumerate_algebras(4, small), BoundExceeded);
  std::string message;
  try {
    enumerate_algebras(7);
  } catch (const BoundExceeded& e) {
    message = e.what();
  }
  CHECK(message.find("estimated") != std::string::npos);
}

TEST_CASE("raw count equals the sum of orbit sizes") {
  for (int n = 1; n <= 5; ++n) {
    EnumerationOptions raw;
    raw.deduplicate = false;
    const auto tables = enumerate_tables(n, raw);
    long factorial = 1;
    for (int k = 2; k < n; ++k) factorial *= k;
    long orbits = 0;
    for (const auto& e : enumerate_algebras(n).entries) orbits += factorial / automorphism_count(e.algebra);
    CHECK(static_cast<long>(tables.size()) == orbits);
  }
}

TEST_CASE("isomorphism witnesses") {
  const auto i = fixtures::a3i();
  const auto self = are_isomorphic(i, i);
  REQUIRE(self.has_value());
  const Algebra swapped = relabel(i, {1, 0, 2});
  const auto h = are_isomorphic(i, swapped);
  REQUIRE(h.has_value());
  for (Element x = 0; x < 3; ++x)
    for (Element y = 0; y < 3; ++y) CHECK((*h)[i.imp(x, y)] == swapped.imp((*h)[x], (*h)[y]));
  // Swapping the atoms reproduces the same table: the transposition is an automorphism.
  CHECK(swapped == i);
  CHECK_FALSE(are_isomorphic(fixtures::a3c(), i).has_value());
  CHECK(automorphism_count(i) == 2);
  CHECK(automorphism_count(fixtures::a3c()) == 1);
}

TEST_CASE("canonical form is idempotent and relabelling-invariant") {
  std::mt19937 rng(20240611);
  for (int n = 1; n <= 5; ++n)
    for (const auto& e : enumerate_algebras(n).entries) {
      const auto cf = canonical_form(e.algebra);
      const Algebra canon = relabel(e.algebra, cf.perm);
      CHECK(canonical_form(canon).table == cf.table);
      CHECK(canon.table() == cf.table);
      std::vector<int> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      CHECK(canonical_form(relabel(e.algebra, perm)).table == cf.table);
    }
}

TEST_CASE("parallel enumeration gives the same catalog") {
  EnumerationOptions par;
  par.jobs = 3;
  const auto a = enumerate_algebras(5);
  const auto b = enumerate_algebras(5, par);
  REQUIRE(a.entries.size() == b.entries.size());
  for (std::size_t k = 0; k < a.entries.size(); ++k) CHECK(a.entries[k].algebra == b.entries[k].algebra);
}

TEST_CASE("catalog statistics") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& e : enumerate_algebras(n).entries) {
      CHECK(e.filters == e.closure_endomorphisms);
      CHECK(e.filters == static_cast<int>(all_filters(e.algebra).carrier.size()));
    }
}

TEST_CASE("endomorphism monoids") {
  const auto m2 = endomorphism_monoid(fixtures::two_chain());
  CHECK(m2.size() == 2);
  const auto i = fixtures::a3i();
  const auto mi = endomorphism_monoid(i);
  CHECK(mi.index_of(EndoMap({1, 0, 2})) >= 0);
  CHECK(monoid_isomorphic(mi, mi));
  CHECK_FALSE(monoid_isomorphic(mi, endomorphism_monoid(fixtures::a3c())));
  for (int n = 1; n <= 4; ++n)
    for (const auto& e : enumerate_algebras(n).entries)
      CHECK(endomorphisms(e.algebra) == endomorphisms_brute_force(e.algebra));
}

TEST_CASE("idempotent-stable monoid elements are the closure endomorphisms") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& e : enumerate_algebras(n).entries) {
      const auto m = endomorphism_monoid(e.algebra);
      std::vector<int> ce;
      for (const auto& f : closure_endomorphisms(e.algebra)) ce.push_back(m.index_of(f));
      std::sort(ce.begin(), ce.end());
      CHECK(idempotent_stable_elements(m) == ce);
    }
}
