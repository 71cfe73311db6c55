#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qhh/errors.hpp"
#include "qhh/linalg.hpp"
#include "qhh/rng.hpp"

using namespace qhh;

namespace {

Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      // Sparse-ish entries with small numerators and denominators.
      if (rng.below(3) == 0) m.at(i, j) = Rational(rng.range(-4, 4), rng.range(1, 3));
    }
  return m;
}

RatVec random_vec(Rng& rng, std::size_t n) {
  RatVec v(n);
  for (auto& x : v)
    if (rng.below(2) == 0) x = Rational(rng.range(-4, 4), rng.range(1, 3));
  return v;
}

}  // namespace

TEST_CASE("rational basics") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(Rational(3, 2).str() == "3/2");
  CHECK(Rational(-7).str() == "-7");
  CHECK(Rational::from_string(" -3/6 ") == Rational(-1, 2));
  CHECK(Rational::from_string("5") == Rational(5));
  CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
  CHECK((Rational(2, 3) * Rational(3, 2)) == Rational(1));
  CHECK(Rational(0).is_zero());
  CHECK(Rational(-5, 3).sign() == -1);
  CHECK_THROWS_AS(Rational(1, 0), DomainError);
  CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
  CHECK_THROWS_AS(Rational::from_string("1/0"), DomainError);
  CHECK_THROWS_AS(Rational::from_string("x"), ParseError);
  CHECK_THROWS_AS(Rational::from_string("1.5"), ParseError);
}

TEST_CASE("rref of identity is identity with all pivots") {
  auto [r, pivots] = rref(Matrix::identity(3));
  CHECK(r == Matrix::identity(3));
  CHECK(pivots == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("rref of a rank-1 matrix") {
  Matrix m = Matrix::from_rows({{Rational(2), Rational(4)}, {Rational(1), Rational(2)}});
  auto [r, pivots] = rref(m);
  Matrix want = Matrix::from_rows({{Rational(1), Rational(2)}, {Rational(0), Rational(0)}});
  CHECK(r == want);
  CHECK(pivots == std::vector<std::size_t>{1 - 1});
}

TEST_CASE("kernel of [[1,1]] is span{(1,-1)}") {
  Matrix m = Matrix::from_rows({{Rational(1), Rational(1)}});
  Subspace k = kernel_basis(m);
  REQUIRE(k.dim() == 1);
  CHECK(k.dense_basis()[0] == RatVec{Rational(1), Rational(-1)});
}

TEST_CASE("image of [[1],[1]] is the diagonal") {
  Matrix m = Matrix::from_rows({{Rational(1)}, {Rational(1)}});
  Subspace im = image_subspace(m);
  REQUIRE(im.dim() == 1);
  CHECK(im.dense_basis()[0] == RatVec{Rational(1), Rational(1)});
}

TEST_CASE("reduce_mod clears pivot coordinates") {
  Subspace s = Subspace::span({SparseVec::from_dense({Rational(1), Rational(1)})}, 2);
  RatVec r = reduce_mod({Rational(1), Rational(0)}, s);
  CHECK(r == RatVec{Rational(0), Rational(-1)});
  // Idempotent, and members reduce to zero.
  CHECK(reduce_mod(r, s) == r);
  CHECK(reduce_mod({Rational(3), Rational(3)}, s) == RatVec{Rational(0), Rational(0)});
  CHECK_THROWS_AS(reduce_mod({Rational(1)}, s), DomainError);
}

TEST_CASE("quotient basis of k^2 mod the diagonal") {
  Subspace s = Subspace::span({SparseVec::from_dense({Rational(1), Rational(1)})}, 2);
  auto q = quotient_basis(2, s);
  REQUIRE(q.size() == 1);
  CHECK(q[0] == RatVec{Rational(0), Rational(1)});
  // Representatives are already reduced.
  CHECK(reduce_mod(q[0], s) == q[0]);
}

TEST_CASE("rank-nullity on random matrices") {
  Rng rng(0xbadc0ffeULL);
  for (int it = 0; it < 200; ++it) {
    std::size_t rows = 1 + rng.below(6), cols = 1 + rng.below(6);
    Matrix m = random_matrix(rng, rows, cols);
    Subspace ker = kernel_basis(m);
    Subspace im = image_subspace(m);
    auto [r, pivots] = rref(m);
    CHECK(pivots.size() + ker.dim() == cols);
    CHECK(im.dim() == pivots.size());
    // Every kernel basis vector is annihilated by m.
    for (const RatVec& v : ker.dense_basis()) {
      for (std::size_t i = 0; i < rows; ++i) {
        Rational acc;
        for (std::size_t j = 0; j < cols; ++j) acc += m.at(i, j) * v[j];
        CHECK(acc.is_zero());
      }
    }
  }
}

TEST_CASE("rref is stable and subspaces canonical") {
  Rng rng(12345);
  for (int it = 0; it < 200; ++it) {
    std::size_t rows = 1 + rng.below(5), cols = 1 + rng.below(5);
    Matrix m = random_matrix(rng, rows, cols);
    auto [r1, p1] = rref(m);
    auto [r2, p2] = rref(r1);
    CHECK(r1 == r2);  // rref(rref(m)) == rref(m)
    CHECK(p1 == p2);

    // The row space does not depend on the presentation: shuffle and rescale.
    std::vector<SparseVec> rows_a = m.sparse_rows();
    std::vector<SparseVec> rows_b = rows_a;
    for (SparseVec& v : rows_b) v.scale(Rational(rng.range(1, 5)));
    for (std::size_t i = rows_b.size(); i > 1; --i)
      std::swap(rows_b[i - 1], rows_b[rng.below(i)]);
    CHECK(Subspace::span(rows_a, cols) == Subspace::span(rows_b, cols));
  }
}

TEST_CASE("reduce_mod is linear and vanishes exactly on members") {
  Rng rng(777);
  for (int it = 0; it < 200; ++it) {
    std::size_t cols = 2 + rng.below(5);
    Matrix m = random_matrix(rng, 1 + rng.below(4), cols);
    Subspace s = Subspace::span(m.sparse_rows(), cols);
    RatVec a = random_vec(rng, cols), b = random_vec(rng, cols);
    Rational c(rng.range(-3, 3));
    RatVec lhs(cols), rhs(cols);
    RatVec combo(cols);
    for (std::size_t j = 0; j < cols; ++j) combo[j] = a[j] + c * b[j];
    RatVec ra = reduce_mod(a, s), rb = reduce_mod(b, s);
    lhs = reduce_mod(combo, s);
    for (std::size_t j = 0; j < cols; ++j) rhs[j] = ra[j] + c * rb[j];
    CHECK(lhs == rhs);

    // v - reduce_mod(v) lies in s.
    SparseVec diff;
    for (std::size_t j = 0; j < cols; ++j) {
      Rational d = a[j] - ra[j];
      if (!d.is_zero()) diff.terms.emplace_back(static_cast<std::uint32_t>(j), d);
    }
    CHECK(s.contains(diff));
  }
}

TEST_CASE("quotient dimensions add up") {
  Rng rng(424242);
  for (int it = 0; it < 100; ++it) {
    std::size_t cols = 1 + rng.below(6);
    Matrix m = random_matrix(rng, 1 + rng.below(6), cols);
    Subspace s = Subspace::span(m.sparse_rows(), cols);
    CHECK(quotient_basis(cols, s).size() + s.dim() == cols);
  }
}
