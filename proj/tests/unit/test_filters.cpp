#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "hilbert/enumeration.hpp"
#include "hilbert/filters.hpp"

using namespace hilbert;

namespace {

// Oracle: contains the unit, closed under detachment. Written against the
// raw table only.
bool oracle_filter(const Algebra& a, std::uint64_t bits) {
  auto in = [&](Element x) { return (bits >> x) & 1U; };
  if (!in(a.one())) return false;
  for (Element x = 0; x < a.size(); ++x)
    for (Element y = 0; y < a.size(); ++y)
      if (in(x) && in(a.imp(x, y)) && !in(y)) return false;
  return true;
}

std::vector<std::uint64_t> oracle_filters(const Algebra& a) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << a.size()); ++b)
    if (oracle_filter(a, b)) out.push_back(b);
  return out;
}

std::vector<std::uint64_t> bits_of(const std::vector<ElementSet>& sets) {
  std::vector<std::uint64_t> out;
  for (ElementSet s : sets) out.push_back(s.bits());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("filter counts of the fixtures") {
  CHECK(all_filters(fixtures::a3c()).carrier.size() == 3);
  CHECK(all_filters(fixtures::a3i()).carrier.size() == 4);
  CHECK(all_filters(fixtures::singleton()).carrier.size() == 1);
  CHECK(all_filters(fixtures::boolean4()).carrier.size() == 4);
}

TEST_CASE("closure enumeration and brute force agree with the oracle up to size 5") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& e : enumerate_algebras(n).entries) {
      const auto expected = oracle_filters(e.algebra);
      CHECK(bits_of(all_filters(e.algebra).carrier) == expected);
      CHECK(bits_of(all_filters_brute_force(e.algebra)) == expected);
    }
  }
}

TEST_CASE("filter lattice is ordered by size then bits") {
  const auto fl = all_filters(fixtures::a3i());
  CHECK(fl.carrier.front() == ElementSet::singleton(2));
  CHECK(fl.carrier.back() == fixtures::a3i().universe());
  CHECK(fl.lattice.size() == 4);
  CHECK(fl.lattice.is_boolean());
}

TEST_CASE("generated filters and joins") {
  const auto c = fixtures::a3c();
  CHECK(filter_generated(c, ElementSet{}) == ElementSet::singleton(2));
  CHECK(principal_filter(c, 1) == (ElementSet{1, 2}));
  const auto i = fixtures::a3i();
  CHECK(filter_join(i, ElementSet{0, 2}, ElementSet{1, 2}) == i.universe());
}

TEST_CASE("congruence classes and monomiality") {
  const auto c = fixtures::a3c();
  const ElementSet j{1, 2};
  CHECK(class_of(c, j, 1) == (ElementSet{1, 2}));
  CHECK(class_of(c, j, 0) == ElementSet::singleton(0));
  CHECK(congruence_classes(c, j).size() == 2);
  CHECK(monomial_max(c, j, 1) == 2);
  CHECK(monomial_max(c, j, 0) == 0);
  CHECK(lower_set(c, j, 0) == ElementSet::singleton(0));
  CHECK(lower_set(c, j, 1) == c.universe());
  for (ElementSet f : all_filters(c).carrier) CHECK(is_monomial(c, f));
}

TEST_CASE("monomial_max stays total on sets without a class maximum") {
  const auto i = fixtures::a3i();
  const ElementSet everything = i.universe();
  CHECK(monomial_max(i, everything, 0) == 2);
  // The empty set relates nothing, so every class is empty.
  CHECK_FALSE(monomial_max(i, ElementSet{}, 0).has_value());
}

TEST_CASE("ideals and alpha-closure") {
  const auto c = fixtures::a3c();
  CHECK(is_ideal(c, ElementSet{0, 1}));
  CHECK_FALSE(is_ideal(c, ElementSet{1}));
  CHECK(is_alpha_closed(c, ElementSet{1, 2}));
  CHECK_FALSE(is_alpha_closed(c, ElementSet{0}));
}

TEST_CASE("finitely generated filters are all filters in the finite case") {
  const auto i = fixtures::a3i();
  auto fg = finitely_generated_filters(i);
  std::sort(fg.begin(), fg.end());
  auto all = all_filters(i).carrier;
  std::sort(all.begin(), all.end());
  CHECK(fg == all);
}
