#include "qhh/linalg.hpp"

#include <algorithm>
#include <map>

#include "qhh/errors.hpp"

namespace qhh {

// ---------------------------------------------------------------- SparseVec

const Rational* SparseVec::find(std::uint32_t col) const {
  auto it = std::lower_bound(terms.begin(), terms.end(), col,
                             [](const auto& t, std::uint32_t c) { return t.first < c; });
  if (it == terms.end() || it->first != col) return nullptr;
  return &it->second;
}

void SparseVec::axpy(const Rational& c, const SparseVec& x) {
  if (c.is_zero() || x.empty()) return;
  std::vector<std::pair<std::uint32_t, Rational>> out;
  out.reserve(terms.size() + x.terms.size());
  auto a = terms.begin();
  auto b = x.terms.begin();
  while (a != terms.end() || b != x.terms.end()) {
    if (b == x.terms.end() || (a != terms.end() && a->first < b->first)) {
      out.push_back(*a++);
    } else if (a == terms.end() || b->first < a->first) {
      out.emplace_back(b->first, c * b->second);
      ++b;
    } else {
      Rational v = a->second + c * b->second;
      if (!v.is_zero()) out.emplace_back(a->first, std::move(v));
      ++a;
      ++b;
    }
  }
  terms = std::move(out);
}

void SparseVec::scale(const Rational& c) {
  if (c.is_zero()) {
    terms.clear();
    return;
  }
  for (auto& [col, v] : terms) v *= c;
}

RatVec SparseVec::to_dense(std::size_t n) const {
  RatVec v(n);
  for (const auto& [col, val] : terms) v.at(col) = val;
  return v;
}

SparseVec SparseVec::from_dense(const RatVec& v) {
  SparseVec s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) s.terms.emplace_back(static_cast<std::uint32_t>(i), v[i]);
  return s;
}

SparseVec SparseVec::unit(std::uint32_t col) {
  SparseVec s;
  s.terms.emplace_back(col, Rational(1));
  return s;
}

// ------------------------------------------------------------------- Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), a_(rows * cols) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

Matrix Matrix::from_rows(const std::vector<RatVec>& rows) {
  if (rows.empty()) return Matrix();
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw DomainError("matrix: ragged rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw DomainError("matrix: dimension mismatch in product");
  Matrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& v = at(i, k);
      if (v.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += v * o.at(k, j);
    }
  return r;
}

bool Matrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Rational& v) { return v.is_zero(); });
}

std::vector<SparseVec> Matrix::sparse_rows() const {
  std::vector<SparseVec> rows(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero())
        rows[i].terms.emplace_back(static_cast<std::uint32_t>(j), at(i, j));
  return rows;
}

std::vector<SparseVec> Matrix::sparse_cols() const {
  std::vector<SparseVec> cols(cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero())
        cols[j].terms.emplace_back(static_cast<std::uint32_t>(i), at(i, j));
  return cols;
}

// ----------------------------------------------------------------- Gaussian

std::vector<std::uint32_t> rref_rows(std::vector<SparseVec>& rows) {
  // Forward phase: reduce each incoming row against the pivots found so
  // far; a surviving row is normalized and becomes a new pivot row.
  std::vector<SparseVec> fin;
  std::map<std::uint32_t, std::size_t> by_pivot;
  for (SparseVec& r : rows) {
    SparseVec v = std::move(r);
    while (!v.empty()) {
      auto it = by_pivot.find(v.lead());
      if (it == by_pivot.end()) break;
      Rational c = -v.terms.front().second;  // pivot rows are normalized
      v.axpy(c, fin[it->second]);
    }
    if (v.empty()) continue;
    Rational inv = Rational(1) / v.terms.front().second;
    v.scale(inv);
    by_pivot.emplace(v.lead(), fin.size());
    fin.push_back(std::move(v));
  }

  // Order by pivot column.
  std::vector<SparseVec> ordered;
  std::vector<std::uint32_t> pivots;
  ordered.reserve(fin.size());
  pivots.reserve(fin.size());
  for (const auto& [col, idx] : by_pivot) {
    pivots.push_back(col);
    ordered.push_back(std::move(fin[idx]));
  }

  // Backward phase: clear pivot columns of later rows from earlier rows.
  // Rows are processed bottom-up so the subtracted rows are already final,
  // and a final row contains no pivot column except its own — one sweep
  // over the current terms therefore suffices.
  std::map<std::uint32_t, std::size_t> pivot_row;
  for (std::size_t i = 0; i < pivots.size(); ++i) pivot_row.emplace(pivots[i], i);
  for (std::size_t i = ordered.size(); i-- > 0;) {
    std::vector<std::pair<std::size_t, Rational>> hits;
    for (const auto& [col, val] : ordered[i].terms) {
      auto it = pivot_row.find(col);
      if (it != pivot_row.end() && it->second > i) hits.emplace_back(it->second, val);
    }
    for (const auto& [j, val] : hits) ordered[i].axpy(-val, ordered[j]);
  }

  rows = std::move(ordered);
  return pivots;
}

std::pair<Matrix, std::vector<std::size_t>> rref(const Matrix& m) {
  std::vector<SparseVec> rows = m.sparse_rows();
  std::vector<std::uint32_t> pivots = rref_rows(rows);
  Matrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (const auto& [col, val] : rows[i].terms) r.at(i, col) = val;
  return {std::move(r), std::vector<std::size_t>(pivots.begin(), pivots.end())};
}

// ----------------------------------------------------------------- Subspace

Subspace Subspace::span(std::vector<SparseVec> rows, std::size_t ambient) {
  for (const SparseVec& r : rows)
    if (!r.empty() && r.terms.back().first >= ambient)
      throw DomainError("subspace: row exceeds ambient dimension");
  Subspace s(ambient);
  s.pivots_ = rref_rows(rows);
  s.rows_ = std::move(rows);
  return s;
}

std::vector<RatVec> Subspace::dense_basis() const {
  std::vector<RatVec> out;
  out.reserve(rows_.size());
  for (const SparseVec& r : rows_) out.push_back(r.to_dense(ambient_));
  return out;
}

SparseVec Subspace::reduce(SparseVec v) const {
  // Basis rows are RREF: each has 1 at its own pivot and 0 at all other
  // pivots, so one pass over the pivots is enough.
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Rational* c = v.find(pivots_[i]);
    if (c != nullptr) v.axpy(-*c, rows_[i]);
  }
  return v;
}

// ------------------------------------------------------- derived subspaces

Subspace kernel_of_rows(const std::vector<SparseVec>& rows, std::size_t cols) {
  std::vector<SparseVec> work = rows;
  std::vector<std::uint32_t> pivots = rref_rows(work);

  std::vector<bool> is_pivot(cols, false);
  for (std::uint32_t p : pivots) {
    if (p >= cols) throw DomainError("kernel: row exceeds stated column count");
    is_pivot[p] = true;
  }

  // Null vector per free column f: 1 at f, -R[i][f] at pivot i.
  std::vector<SparseVec> null;
  for (std::uint32_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    SparseVec v;
    for (std::size_t i = 0; i < work.size(); ++i) {
      const Rational* c = work[i].find(f);
      if (c != nullptr) v.terms.emplace_back(pivots[i], -*c);
    }
    v.terms.emplace_back(f, Rational(1));
    std::sort(v.terms.begin(), v.terms.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    null.push_back(std::move(v));
  }
  return Subspace::span(std::move(null), cols);
}

Subspace kernel_basis(const Matrix& m) {
  return kernel_of_rows(m.sparse_rows(), m.cols());
}

Subspace image_subspace(const Matrix& m) {
  return Subspace::span(m.sparse_cols(), m.rows());
}

RatVec reduce_mod(const RatVec& v, const Subspace& s) {
  if (v.size() != s.ambient_dim())
    throw DomainError("reduce_mod: vector/subspace dimension mismatch");
  return s.reduce(SparseVec::from_dense(v)).to_dense(v.size());
}

std::vector<RatVec> quotient_basis(std::size_t ambient, const Subspace& s) {
  if (s.ambient_dim() != ambient)
    throw DomainError("quotient_basis: ambient dimension mismatch");
  std::vector<bool> is_pivot(ambient, false);
  for (std::uint32_t p : s.pivots()) is_pivot[p] = true;
  std::vector<RatVec> out;
  for (std::size_t i = 0; i < ambient; ++i) {
    if (is_pivot[i]) continue;
    RatVec v(ambient);
    v[i] = Rational(1);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace qhh
