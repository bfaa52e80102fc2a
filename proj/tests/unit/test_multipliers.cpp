#include <doctest.h>

#include "fixtures.hpp"
#include "hilbert/enumeration.hpp"
#include "hilbert/multipliers.hpp"

using namespace hilbert;

namespace {

// Oracle: every self-map checked against phi(x -> y) = x -> phi(y).
std::vector<EndoMap> oracle_multipliers(const Algebra& a) {
  std::vector<EndoMap> out;
  const int n = a.size();
  std::vector<Element> img(n, 0);
  while (true) {
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x)
      for (Element y = 0; y < n && ok; ++y) ok = img[a.imp(x, y)] == a.imp(x, img[y]);
    if (ok) out.emplace_back(img);
    int k = n - 1;
    while (k >= 0 && ++img[k] == n) img[k--] = 0;
    if (k < 0) break;
  }
  return out;
}

}  // namespace

TEST_CASE("multipliers of the two-element chain are eps and iota") {
  const auto c = fixtures::two_chain();
  const auto ms = multipliers(c);
  REQUIRE(ms.size() == 2);
  CHECK(ms[0] == eps(c));
  CHECK(ms[1] == iota(c));
}

TEST_CASE("the Goedel chain has a non-isotone multiplier") {
  const auto c = fixtures::a3c();
  const auto ms = multipliers(c);
  CHECK(ms.size() == 4);
  const EndoMap d = delta(c, 1);
  CHECK(d == EndoMap({2, 1, 2}));
  CHECK(is_multiplier(c, d));
  CHECK_FALSE(is_isotone(c, d));
  CHECK(all_multipliers(c).size() == 4);
}

TEST_CASE("named maps on A3i") {
  const auto i = fixtures::a3i();
  CHECK(delta(i, 0) == EndoMap({0, 2, 2}));
  CHECK(delta(i, 0) == alpha(i, 1));
  CHECK(alpha(i, 2) == eps(i));
  CHECK(multipliers(i).size() == 4);
}

TEST_CASE("propagation search equals the oracle up to size 5") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& e : enumerate_algebras(n).entries) {
      CHECK(multipliers(e.algebra) == oracle_multipliers(e.algebra));
      CHECK(multipliers_brute_force(e.algebra) == oracle_multipliers(e.algebra));
    }
}

TEST_CASE("multiplier algebra structure") {
  const auto m = all_multipliers(fixtures::boolean4());
  CHECK(m.size() == 4);
  CHECK(m.carrier[m.eps] == eps(fixtures::boolean4()));
  for (int i = 0; i < m.size(); ++i) {
    CHECK(m.meet[i][m.complement[i]] == m.eps);
    CHECK(m.compose[i][m.complement[i]] == m.iota);
  }
}

TEST_CASE("multiplier blocks") {
  const auto i = fixtures::a3i();
  CHECK(multiplier_block(i, 0) == (ElementSet{0, 2}));
  CHECK(multiplier_block(i, 2) == ElementSet::singleton(2));
  CHECK(is_block(i, multiplier_block(i, 1)));
}

TEST_CASE("calculus and structure checks pass on the fixtures") {
  for (const Algebra& a : {fixtures::singleton(), fixtures::a3c(), fixtures::a3i(), fixtures::boolean4()}) {
    const auto calc = check_multiplier_calculus(a);
    CHECK(calc.checks.size() == 9);
    CHECK(calc.passed());
    CHECK(check_multiplier_structure(a).passed());
  }
}

TEST_CASE("calculus check reports a witness for a corrupted law") {
  // A sanity check on Check itself: a forced failure carries its witness.
  Check c("demo");
  c.expect(false, [] { return std::string("phi=[0] x=0"); });
  const auto r = c.finish();
  CHECK(r.status == Status::fail);
  REQUIRE(r.witnesses.size() == 1);
  CHECK(r.witnesses[0] == "phi=[0] x=0");
}
