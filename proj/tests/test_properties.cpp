#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qhh/verify.hpp"

using namespace qhh;

TEST_CASE("identity suite passes on the loop quivers") {
  for (std::size_t loops : {1u, 2u}) {
    Quiver q = Quiver::loops(loops);
    std::vector<CheckResult> checks = run_property_suite(q, 42, 50);
    REQUIRE(checks.size() == 5);
    for (const CheckResult& c : checks) {
      CAPTURE(c.name);
      CHECK(c.ok);
    }
    CHECK(all_ok(checks));
  }
}

TEST_CASE("identity suite passes on a multi-vertex quiver") {
  Quiver q = parse_quiver(R"({"vertices":["1","2"],
    "arrows":[{"id":"a","src":"1","tgt":"2"},{"id":"b","src":"2","tgt":"1"}]})");
  CHECK(all_ok(run_property_suite(q, 7, 50)));
}

TEST_CASE("suite is deterministic in the seed") {
  Quiver q = Quiver::loops(2);
  std::vector<CheckResult> a = run_property_suite(q, 99, 20);
  std::vector<CheckResult> b = run_property_suite(q, 99, 20);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].name == b[i].name);
    CHECK(a[i].ok == b[i].ok);
    CHECK(a[i].detail == b[i].detail);
  }
}

TEST_CASE("oracle suite adapts its degree cap to the algebra size") {
  std::vector<CheckResult> one = run_oracle_suite(Quiver::loops(1), 1);
  CHECK(all_ok(one));
  bool saw = false;
  for (const CheckResult& c : one)
    if (c.name == "dimension agreement") {
      saw = true;
      CHECK(c.detail == "n = 0..4: 2,1,1,1,1");
    }
  CHECK(saw);

  std::vector<CheckResult> two = run_oracle_suite(Quiver::loops(2), 1);
  CHECK(all_ok(two));
  for (const CheckResult& c : two)
    if (c.name == "dimension agreement") CHECK(c.detail == "n = 0..3: 3,4,6,12");
}
