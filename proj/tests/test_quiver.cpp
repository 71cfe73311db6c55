#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qhh/errors.hpp"
#include "qhh/quiver.hpp"

using namespace qhh;

namespace {

const char* kTwoLoopsJson = R"({
  "vertices": ["e"],
  "arrows": [
    {"id": "a", "src": "e", "tgt": "e"},
    {"id": "b", "src": "e", "tgt": "e"}
  ]
})";

const char* kA2Json = R"({
  "vertices": ["u", "v"],
  "arrows": [{"id": "a", "src": "u", "tgt": "v"}]
})";

}  // namespace

TEST_CASE("parse_quiver accepts the documented schema") {
  Quiver q = parse_quiver(kTwoLoopsJson);
  CHECK(q.num_vertices() == 1);
  CHECK(q.num_arrows() == 2);
  CHECK(q.arrow_index("a") == 0);
  CHECK(q.arrow_index("b") == 1);
  CHECK(q == Quiver::loops(2));

  Quiver a2 = parse_quiver(kA2Json);
  CHECK(a2.num_vertices() == 2);
  CHECK(a2.arrow(0).src == 0);
  CHECK(a2.arrow(0).tgt == 1);
}

TEST_CASE("parse_quiver rejects malformed input") {
  CHECK_THROWS_AS(parse_quiver("not json"), ParseError);
  CHECK_THROWS_AS(parse_quiver("[1,2]"), ParseError);
  CHECK_THROWS_AS(parse_quiver(R"({"vertices": ["e"]})"), ParseError);
  // Unknown fields anywhere are rejected.
  CHECK_THROWS_AS(parse_quiver(R"({"vertices": ["e"], "arrows": [], "extra": 1})"), ParseError);
  CHECK_THROWS_AS(
      parse_quiver(
          R"({"vertices": ["e"], "arrows": [{"id":"a","src":"e","tgt":"e","w":1}]})"),
      ParseError);
  // Dangling endpoints and duplicates.
  CHECK_THROWS_AS(
      parse_quiver(R"({"vertices": ["e"], "arrows": [{"id":"a","src":"e","tgt":"f"}]})"),
      ParseError);
  CHECK_THROWS_AS(parse_quiver(R"({"vertices": ["e", "e"], "arrows": []})"), ParseError);
  CHECK_THROWS_AS(
      parse_quiver(
          R"({"vertices": ["e"],
              "arrows": [{"id":"a","src":"e","tgt":"e"}, {"id":"a","src":"e","tgt":"e"}]})"),
      ParseError);
}

TEST_CASE("path enumeration counts and order") {
  Quiver q = Quiver::loops(2);
  // 2^n words of two loops, lexicographic.
  for (std::size_t n = 0; n <= 6; ++n) {
    auto ps = enumerate_paths(q, n);
    CHECK(ps.size() == (n == 0 ? 1 : (std::size_t{1} << n)));
  }
  auto p2 = enumerate_paths(q, 2);
  REQUIRE(p2.size() == 4);
  CHECK(p2[0].str(q) == "aa");
  CHECK(p2[1].str(q) == "ab");
  CHECK(p2[2].str(q) == "ba");
  CHECK(p2[3].str(q) == "bb");

  // Two vertices, one arrow: no words of length >= 2.
  Quiver a2 = parse_quiver(kA2Json);
  CHECK(enumerate_paths(a2, 0).size() == 2);
  CHECK(enumerate_paths(a2, 1).size() == 1);
  CHECK(enumerate_paths(a2, 2).empty());
  CHECK(enumerate_paths(a2, 5).empty());
}

TEST_CASE("path enumeration respects the budget") {
  Quiver q = Quiver::loops(2);
  CHECK_THROWS_AS(enumerate_paths(q, 21, std::uint64_t{1} << 20), BudgetError);
  CHECK(enumerate_paths(q, 20, std::uint64_t{1} << 20).size() == std::size_t{1} << 20);
  CHECK_THROWS_AS(enumerate_paths(q, 4, 15), BudgetError);
  // Budget counts |Q1|^n, so even an empty path set can be refused.
  Quiver a2 = parse_quiver(kA2Json);
  CHECK_NOTHROW(enumerate_paths(a2, 64));
}

TEST_CASE("parallel pairs of the running example") {
  Quiver q = Quiver::loops(2);
  // Single vertex: every length-2 path pairs with the vertex and with both
  // arrows, so |Q2 || Q0| = 4 and |Q2 || Q1| = 8.
  CHECK(parallel_pairs(q, 2, PairKind::vertex).size() == 4);
  CHECK(parallel_pairs(q, 2, PairKind::arrow).size() == 8);
  auto pairs = parallel_pairs(q, 1, PairKind::arrow);
  REQUIRE(pairs.size() == 4);
  CHECK(pairs[0].str(q) == "(a,a)");
  CHECK(pairs[1].str(q) == "(a,b)");
  CHECK(pairs[2].str(q) == "(b,a)");
  CHECK(pairs[3].str(q) == "(b,b)");

  // Non-cycle paths admit no vertex shortcut.
  Quiver a2 = parse_quiver(kA2Json);
  CHECK(parallel_pairs(a2, 1, PairKind::vertex).empty());
  CHECK(parallel_pairs(a2, 1, PairKind::arrow).size() == 1);
  CHECK(parallel_pairs(a2, 0, PairKind::vertex).size() == 2);
}

TEST_CASE("pair validation") {
  Quiver a2 = parse_quiver(kA2Json);
  Path a = Path::word(a2, {0});
  CHECK_THROWS_AS(ParallelPair::make(a2, a, true, 0), DomainError);  // u is not parallel to a
  CHECK_NOTHROW(ParallelPair::make(a2, a, false, 0));
  CHECK_THROWS_AS(Path::word(a2, {0, 0}), DomainError);  // aa is not composable
}

TEST_CASE("substitution splices words") {
  Quiver q = Quiver::loops(2);
  Path ab = Path::word(q, {0, 1});
  Path ba = Path::word(q, {1, 0});
  // Replace position 2 of "ab" by "ba": a(ba) = "aba".
  CHECK(substitute(q, ab, 2, ba).str(q) == "aba");
  CHECK(substitute(q, ab, 1, ba).str(q) == "bab");
  // Length law: |result| = n + m - 1.
  CHECK(substitute(q, ab, 2, ba).length() == ab.length() + ba.length() - 1);
  // Replacing by a single arrow rewrites one letter.
  CHECK(substitute(q, ab, 1, Path::word(q, {1})).str(q) == "bb");
  // Replacing a loop by a trivial path drops the letter.
  CHECK(substitute(q, ab, 1, Path::trivial(0)).str(q) == "b");
  CHECK(substitute(q, Path::word(q, {0}), 1, Path::trivial(0)).is_trivial());

  CHECK_THROWS_AS(substitute(q, ab, 0, ba), DomainError);
  CHECK_THROWS_AS(substitute(q, ab, 3, ba), DomainError);
  Quiver a2 = parse_quiver(kA2Json);
  // Parallelism is required: "a" (u -> v) cannot replace a loop.
  CHECK_THROWS_AS(substitute(q, ab, 1, Path::word(a2, {0})), DomainError);
}

TEST_CASE("single-vertex pair counts factorize") {
  for (std::size_t loops = 1; loops <= 3; ++loops) {
    Quiver q = Quiver::loops(loops);
    for (std::size_t n = 1; n <= 4; ++n) {
      auto paths = enumerate_paths(q, n);
      CHECK(parallel_pairs(q, n, PairKind::vertex).size() == paths.size());
      CHECK(parallel_pairs(q, n, PairKind::arrow).size() == paths.size() * q.num_arrows());
    }
  }
}
