#include <doctest.h>

#include <json.hpp>

#include "fixtures.hpp"
#include "hilbert/enumeration.hpp"
#include "hilbert/errors.hpp"
#include "hilbert/io.hpp"
#include "hilbert/suites.hpp"

using namespace hilbert;

TEST_CASE("JSON and text formats parse to the same algebra") {
  const Algebra from_json = to_algebra(parse_algebra_file(
      R"({"size": 3, "one": 2, "labels": ["0", "a", "1"], "table": [[2,2,2],[0,2,2],[0,1,2]]})"));
  const Algebra from_text = to_algebra(parse_algebra_file("# chain\nlabels 0 a 1\none 1\n1 1 1\n0 1 1\n0 a 1\n"));
  CHECK(from_json == fixtures::a3c());
  CHECK(from_text == fixtures::a3c());
  CHECK(from_text.labels() == fixtures::a3c().labels());
  const Algebra plain = to_algebra(parse_algebra_file("one 1\n1 1\n0 1\n"));
  CHECK(plain == fixtures::two_chain());
}

TEST_CASE("input errors") {
  CHECK_THROWS_AS(parse_algebra_file("{\"one\": 0"), MalformedInput);
  CHECK_THROWS_AS(parse_algebra_file("labels x x\none x\nx x\nx x\n"), MalformedInput);
  CHECK_THROWS_AS(parse_algebra_file("1 1\n0 1\n"), MalformedInput);
  CHECK_THROWS_AS(parse_algebra_file("one 1\n1 q\n0 1\n"), MalformedInput);
  CHECK_THROWS_AS(parse_algebra_file(R"({"size": 3, "one": 1, "table": [[1,1],[0,1]]})"), MalformedInput);
  CHECK_THROWS_AS(to_algebra(parse_algebra_file("one 1\n1 5\n0 1\n")), MalformedInput);
  CHECK_THROWS_AS(to_algebra(parse_algebra_file("one 2\n2 2 2\n1 2 2\n0 1 2\n")), InvalidAlgebra);
}

TEST_CASE("exported catalog members re-validate to the same canonical form") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& e : enumerate_algebras(n).entries) {
      const auto canon = canonical_form(e.algebra).table;
      const Algebra via_json = to_algebra(parse_algebra_file(to_json_text(e.algebra)));
      const Algebra via_text = to_algebra(parse_algebra_file(to_plain_text(e.algebra)));
      CHECK(canonical_form(via_json).table == canon);
      CHECK(canonical_form(via_text).table == canon);
    }
}

TEST_CASE("DOT export of the chain order") {
  const auto c = fixtures::a3c();
  const auto dot = to_dot("hasse", Poset::from_relation(3, [&](int x, int y) { return c.leq(x, y); }), c.labels());
  CHECK(dot == "digraph hasse {\n  rankdir=BT;\n  n0 [label=\"0\"];\n  n1 [label=\"a\"];\n  n2 [label=\"1\"];\n"
               "  n0 -> n1;\n  n1 -> n2;\n}\n");
}

TEST_CASE("reports render without timing unless asked") {
  VerificationReport r;
  Check c("demo/check");
  c.skip("nothing to do");
  r.add(c.finish());
  const auto doc = nlohmann::json::parse(report_to_json(r, false));
  CHECK(doc["checks"][0]["status"] == "skipped");
  CHECK(doc["checks"][0]["reason"] == "nothing to do");
  CHECK_FALSE(doc["checks"][0].contains("elapsed_ms"));
  CHECK(nlohmann::json::parse(report_to_json(r, true))["checks"][0].contains("elapsed_ms"));
  CHECK(report_to_text(r, false).find("ms") == std::string::npos);
}

TEST_CASE("suite registry") {
  CHECK(is_suite("kappa"));
  CHECK(is_suite("cross-survey"));
  CHECK_FALSE(is_suite("all"));
  CHECK_THROWS_AS(run_suite("nope", fixtures::a3c()), PreconditionError);
  CHECK_THROWS_AS(verify({}, {"nope"}), PreconditionError);
}

TEST_CASE("implication-only suite is skipped with a reason elsewhere") {
  const auto r = run_suite("impla", fixtures::a3c());
  REQUIRE(r.checks.size() == 1);
  CHECK(r.checks[0].status == Status::skipped);
  CHECK(r.checks[0].reason == "not an implication algebra");
}

TEST_CASE("verify aggregates per check and is independent of jobs") {
  std::vector<NamedAlgebra> algebras{{"chain", fixtures::a3c()}, {"atoms", fixtures::a3i()}};
  const auto one = verify(algebras, {"all"}, 1);
  const auto many = verify(algebras, {"all"}, 4);
  CHECK(one.passed());
  CHECK(report_to_json(one, false) == report_to_json(many, false));
  const CheckResult* k = one.find("kappa/injective");
  REQUIRE(k != nullptr);
  CHECK(k->cases_passed == 2);
  const CheckResult* pairs = one.find("cross-survey/pairs");
  REQUIRE(pairs != nullptr);
  CHECK(pairs->notes.size() == 3);
}

TEST_CASE("cross survey over a two-algebra list") {
  const auto r = cross_survey({{"chain", fixtures::a3c()}, {"atoms", fixtures::a3i()}});
  CHECK(r.passed());
  const auto* pairs = r.find("cross-survey/pairs");
  REQUIRE(pairs != nullptr);
  CHECK(pairs->notes[1] == "chain ~ atoms: filters no, adjoint no, monoid no, algebra no");
}
