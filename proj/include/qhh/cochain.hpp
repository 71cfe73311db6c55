#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "qhh/linalg.hpp"
#include "qhh/quiver.hpp"

namespace qhh {

/// The degree-n term of the combinatorial cochain complex of kQ/(paths of
/// length 2): C^n = k(Q_n || Q_0) (+) k(Q_n || Q_1), with the vertex block
/// first.  Basis order is path-major within each block.
class CochainSpace {
public:
  CochainSpace(const Quiver& q, std::size_t degree,
               std::uint64_t budget = kDefaultBasisBudget);

  std::size_t degree() const { return degree_; }
  std::size_t dim() const { return basis_.size(); }
  /// Size of the Q_n || Q_0 block.
  std::size_t vertex_block() const { return vertex_block_; }
  const std::vector<ParallelPair>& basis() const { return basis_; }
  const ParallelPair& pair_at(std::size_t i) const { return basis_.at(i); }
  std::optional<std::size_t> find(const ParallelPair& p) const;
  /// Throws DomainError when p is not a degree-matching basis element.
  std::size_t index_of(const ParallelPair& p) const;

private:
  std::size_t degree_ = 0;
  std::size_t vertex_block_ = 0;
  std::vector<ParallelPair> basis_;
  std::map<ParallelPair, std::size_t> index_;
};

/// Formal rational combination of parallel pairs of a fixed degree.
/// Zero coefficients are never stored.
class Cochain {
public:
  explicit Cochain(std::size_t degree) : degree_(degree) {}
  static Cochain of(std::size_t degree, const ParallelPair& p,
                    const Rational& coef = Rational(1));

  std::size_t degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<ParallelPair, Rational>& terms() const { return terms_; }
  Rational coef(const ParallelPair& p) const;

  /// Adds c * p; throws DomainError when the pair's degree differs.
  void add(const ParallelPair& p, const Rational& c);

  Cochain& operator+=(const Cochain& o);
  Cochain& operator-=(const Cochain& o);
  Cochain& operator*=(const Rational& c);
  friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
  friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
  friend Cochain operator*(const Rational& c, Cochain a) { return a *= c; }
  Cochain operator-() const;

  bool operator==(const Cochain&) const = default;

private:
  std::size_t degree_;
  std::map<ParallelPair, Rational> terms_;
};

/// Coordinates of c in the basis of s (DomainError when degrees differ).
SparseVec to_coords(const CochainSpace& s, const Cochain& c);
Cochain from_coords(const CochainSpace& s, const SparseVec& v);

/// Matrix of the vertex-to-arrow differential
///   D_n : k(Q_n || Q_0) -> k(Q_{n+1} || Q_1)
///   (gamma, e) |-> sum_{a: prependable} (a gamma, a)
///               + (-1)^{n+1} sum_{a: appendable} (gamma a, a)
/// in the enumeration bases (rows = degree-(n+1) arrow pairs).
Matrix d_map(const Quiver& q, std::size_t n, std::uint64_t budget = kDefaultBasisBudget);

/// Full differential C^n -> C^{n+1}: D_n on the vertex block, zero on the
/// arrow block.
Matrix full_differential(const Quiver& q, std::size_t n,
                         std::uint64_t budget = kDefaultBasisBudget);

/// The differential applied term by term (no matrices, no enumeration).
Cochain apply_differential(const Quiver& q, const Cochain& c);

/// HH^n presented as kernel/image inside C^n coordinates.
struct CohomologyGroup {
  std::size_t degree = 0;
  std::size_t dim = 0;
  CochainSpace space;
  Subspace kernel;  ///< cocycles
  Subspace image;   ///< coboundaries
  /// Canonical representatives: a basis of kernel/image, each reduced
  /// modulo the image (reduce_mod fixes them).
  std::vector<Cochain> representatives;
};

CohomologyGroup cohomology(const Quiver& q, std::size_t n,
                           std::uint64_t budget = kDefaultBasisBudget);

/// dim HH^n for n = 0..n_max (rank bookkeeping only; cheaper than
/// materializing every group).
std::vector<std::size_t> hh_dim_table(const Quiver& q, std::size_t n_max,
                                      std::uint64_t budget = kDefaultBasisBudget);

namespace detail {

/// Columns of D_n over the degree-(n+1) arrow-pair basis.
struct DColumns {
  std::size_t domain_dim = 0;    // |Q_n || Q_0|
  std::size_t codomain_dim = 0;  // |Q_{n+1} || Q_1|
  std::vector<SparseVec> cols;
};

DColumns d_columns(const Quiver& q, std::size_t n, std::uint64_t budget);

}  // namespace detail

}  // namespace qhh
