#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qhh/cochain.hpp"
#include "qhh/errors.hpp"
#include "qhh/rng.hpp"

using namespace qhh;

namespace {

Cochain random_cochain(Rng& rng, const Quiver& q, const CochainSpace& space, int max_terms) {
  Cochain c(space.degree());
  if (space.dim() == 0) return c;
  int terms = 1 + static_cast<int>(rng.below(max_terms));
  for (int t = 0; t < terms; ++t)
    c.add(space.pair_at(rng.below(space.dim())), Rational(rng.range(-4, 4), rng.range(1, 3)));
  (void)q;
  return c;
}

}  // namespace

TEST_CASE("cochain space layout: vertex block first, path-major") {
  Quiver q = Quiver::loops(2);
  CochainSpace c1(q, 1);
  REQUIRE(c1.dim() == 6);
  CHECK(c1.vertex_block() == 2);
  CHECK(c1.pair_at(0).str(q) == "(a,@e)");
  CHECK(c1.pair_at(1).str(q) == "(b,@e)");
  CHECK(c1.pair_at(2).str(q) == "(a,a)");
  CHECK(c1.pair_at(3).str(q) == "(a,b)");
  CHECK(c1.pair_at(4).str(q) == "(b,a)");
  CHECK(c1.pair_at(5).str(q) == "(b,b)");
  CHECK(c1.index_of(c1.pair_at(4)) == 4);

  // Degree-0 space holds the vertex and the loop shortcuts.
  CochainSpace c0(q, 0);
  CHECK(c0.dim() == 3);
  CHECK(c0.vertex_block() == 1);

  // Degree-3 arrow block has 2^3 * 2 = 16 pairs.
  CochainSpace c3(q, 3);
  CHECK(c3.dim() == 8 + 16);
  CHECK(c3.vertex_block() == 8);
}

TEST_CASE("cochain arithmetic keeps terms pruned") {
  Quiver q = Quiver::loops(2);
  CochainSpace c1(q, 1);
  Cochain f(1);
  f.add(c1.pair_at(2), Rational(2));
  f.add(c1.pair_at(2), Rational(-2));
  CHECK(f.is_zero());
  f.add(c1.pair_at(3), Rational(1, 2));
  Cochain g = f + f;
  CHECK(g.coef(c1.pair_at(3)) == Rational(1));
  g *= Rational(0);
  CHECK(g.is_zero());
  CHECK((-f).coef(c1.pair_at(3)) == Rational(-1, 2));
  CHECK_THROWS_AS(f.add(ParallelPair::make(q, Path::word(q, {0, 0}), true, 0), Rational(1)),
                  DomainError);

  // Coordinates round-trip.
  SparseVec v = to_coords(c1, f);
  CHECK(from_coords(c1, v) == f);
}

TEST_CASE("differential of (a,e) on two loops") {
  Quiver q = Quiver::loops(2);
  Matrix d1 = d_map(q, 1);
  REQUIRE(d1.rows() == 8);  // degree-2 arrow pairs
  REQUIRE(d1.cols() == 2);  // (a,@e), (b,@e)
  // D_1(a,e) = 2(aa,a) + (ab,b) + (ba,b); rows are path-major:
  // (aa,a) (aa,b) (ab,a) (ab,b) (ba,a) (ba,b) (bb,a) (bb,b).
  RatVec col0{Rational(2), Rational(0), Rational(0), Rational(1),
              Rational(0), Rational(1), Rational(0), Rational(0)};
  RatVec col1{Rational(0), Rational(0), Rational(1), Rational(0),
              Rational(1), Rational(0), Rational(0), Rational(2)};
  for (std::size_t i = 0; i < 8; ++i) {
    CHECK(d1.at(i, 0) == col0[i]);
    CHECK(d1.at(i, 1) == col1[i]);
  }
}

TEST_CASE("one-loop differential alternates between zero and injective") {
  Quiver q = Quiver::loops(1);
  for (std::size_t n = 0; n <= 6; ++n) {
    Matrix d = d_map(q, n);
    REQUIRE(d.rows() == 1);
    REQUIRE(d.cols() == 1);
    if (n % 2 == 0) {
      CHECK(d.at(0, 0) == Rational(0));
    } else {
      CHECK(d.at(0, 0) == Rational(2));
    }
  }
}

TEST_CASE("d squared is zero") {
  for (const Quiver& q : {Quiver::loops(1), Quiver::loops(2)}) {
    for (std::size_t n = 0; n <= 3; ++n) {
      Matrix a = full_differential(q, n + 1);
      Matrix b = full_differential(q, n);
      CHECK((a * b).is_zero());
    }
  }
}

TEST_CASE("apply_differential agrees with the matrix and squares to zero") {
  Rng rng(2024);
  Quiver q = Quiver::loops(2);
  for (std::size_t n = 0; n <= 4; ++n) {
    CochainSpace dom(q, n);
    CochainSpace tgt(q, n + 1);
    Matrix m = full_differential(q, n);
    for (int it = 0; it < 25; ++it) {
      Cochain c = random_cochain(rng, q, dom, 4);
      Cochain dc = apply_differential(q, c);
      // Against the matrix.
      RatVec x = to_coords(dom, c).to_dense(dom.dim());
      RatVec want(tgt.dim());
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) want[i] += m.at(i, j) * x[j];
      CHECK(to_coords(tgt, dc).to_dense(tgt.dim()) == want);
      // d(d(c)) = 0.
      CHECK(apply_differential(q, dc).is_zero());
    }
  }
}

TEST_CASE("cohomology dimensions of the running examples") {
  Quiver one = Quiver::loops(1);
  CHECK(hh_dim_table(one, 8) ==
        std::vector<std::size_t>{2, 1, 1, 1, 1, 1, 1, 1, 1});

  Quiver two = Quiver::loops(2);
  CHECK(hh_dim_table(two, 5) == std::vector<std::size_t>{3, 4, 6, 12, 24, 48});
  // dim HH^n = 2^(n+1) - 2^(n-1) for n > 1.
  for (std::size_t n = 2; n <= 5; ++n)
    CHECK(cohomology(two, n).dim == (std::size_t{1} << (n + 1)) - (std::size_t{1} << (n - 1)));

  // Two vertices, one arrow: k in degree 0, nothing above.
  Quiver a2({"u", "v"}, {{"a", 0, 1}});
  CHECK(hh_dim_table(a2, 5) == std::vector<std::size_t>{1, 0, 0, 0, 0, 0});
}

TEST_CASE("cohomology groups carry coherent witnesses") {
  Quiver q = Quiver::loops(2);
  for (std::size_t n = 1; n <= 4; ++n) {
    CohomologyGroup g = cohomology(q, n);
    CHECK(g.dim == g.kernel.dim() - g.image.dim());
    CHECK(g.representatives.size() == g.dim);
    for (const Cochain& rep : g.representatives) {
      // Representatives are cocycles in canonical reduced position.
      CHECK(apply_differential(q, rep).is_zero());
      SparseVec v = to_coords(g.space, rep);
      CHECK(g.image.reduce(v) == v);
      CHECK(g.kernel.contains(v));
    }
    // Coboundaries are cocycles (im is inside ker).
    for (const SparseVec& row : g.image.rows()) CHECK(g.kernel.contains(row));
  }
}

TEST_CASE("enumeration budget propagates to cohomology") {
  Quiver q = Quiver::loops(2);
  CHECK_THROWS_AS(cohomology(q, 4, 16), BudgetError);  // needs 2^5 paths
  CHECK_NOTHROW(cohomology(q, 3, 16));
}
