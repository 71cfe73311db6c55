#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "qhh/rational.hpp"

namespace qhh {

using RatVec = std::vector<Rational>;

/// Sparse vector: (column, coefficient) terms with strictly increasing
/// columns and nonzero coefficients.
struct SparseVec {
  std::vector<std::pair<std::uint32_t, Rational>> terms;

  bool empty() const { return terms.empty(); }
  std::uint32_t lead() const { return terms.front().first; }
  /// Coefficient at col, or nullptr when absent.
  const Rational* find(std::uint32_t col) const;

  /// *this += c * x (sparse merge).
  void axpy(const Rational& c, const SparseVec& x);
  void scale(const Rational& c);

  RatVec to_dense(std::size_t n) const;
  static SparseVec from_dense(const RatVec& v);
  static SparseVec unit(std::uint32_t col);

  bool operator==(const SparseVec&) const = default;
};

/// Dense matrix of rationals (row-major).
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<RatVec>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  Matrix operator*(const Matrix& o) const;
  bool operator==(const Matrix&) const = default;
  bool is_zero() const;

  std::vector<SparseVec> sparse_rows() const;
  std::vector<SparseVec> sparse_cols() const;

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

/// In-place canonical reduced row echelon form of a set of spanning rows:
/// drops zero rows, normalizes leading entries to 1, clears above and below
/// each pivot, orders rows by pivot column.  Returns the pivot columns
/// (ascending).  Pivots are chosen as the first nonzero entry in column
/// order, which together with exact arithmetic makes the output the unique
/// RREF of the row space — hence bit-deterministic.
std::vector<std::uint32_t> rref_rows(std::vector<SparseVec>& rows);

/// Dense RREF: returns (R, pivot columns) with R the same shape as m.
std::pair<Matrix, std::vector<std::size_t>> rref(const Matrix& m);

/// A linear subspace of k^ambient, stored as canonical RREF rows.
/// Equal subspaces compare equal (uniqueness of RREF).
class Subspace {
public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : ambient_(ambient) {}
  /// Span of arbitrary rows; reduces to canonical form.
  static Subspace span(std::vector<SparseVec> rows, std::size_t ambient);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<SparseVec>& rows() const { return rows_; }
  const std::vector<std::uint32_t>& pivots() const { return pivots_; }
  std::vector<RatVec> dense_basis() const;

  /// v minus its projection onto the subspace along pivot coordinates:
  /// subtracts multiples of basis rows until every pivot coordinate is
  /// zero.  Idempotent; the zero vector iff v is in the subspace.
  SparseVec reduce(SparseVec v) const;
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }

  bool operator==(const Subspace&) const = default;

private:
  std::size_t ambient_ = 0;
  std::vector<SparseVec> rows_;
  std::vector<std::uint32_t> pivots_;
};

/// Right null space { v : M v = 0 } as a subspace of k^cols.
Subspace kernel_basis(const Matrix& m);
/// Null space from sparse rows (the matrix whose rows are given).
Subspace kernel_of_rows(const std::vector<SparseVec>& rows, std::size_t cols);
/// Column space of M as a subspace of k^rows.
Subspace image_subspace(const Matrix& m);

/// Canonical representative of v modulo s.  Throws DomainError when
/// v.size() != s.ambient_dim().
RatVec reduce_mod(const RatVec& v, const Subspace& s);

/// Representatives of a basis of k^ambient / s: the unit vectors at
/// non-pivot coordinates, in coordinate order.
std::vector<RatVec> quotient_basis(std::size_t ambient, const Subspace& s);

}  // namespace qhh
