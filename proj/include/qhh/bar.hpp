#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qhh/cochain.hpp"
#include "qhh/rng.hpp"

namespace qhh {

/// Cap on (dim A)^(arity+1), the number of scalars in a tabulated
/// multilinear map.  Keeps the brute-force referee desk-scale.
inline constexpr std::uint64_t kDefaultBarBudget = 243;

/// The algebra A = kQ / (paths of length >= 2), tabulated on the basis
/// {vertex idempotents} followed by {arrows}.  Products of basis elements
/// are single basis elements or zero, so a table of indices suffices.
class FiniteAlgebra {
public:
  explicit FiniteAlgebra(const Quiver& q);

  std::size_t dim() const { return nv_ + q_.num_arrows(); }
  std::size_t num_vertices() const { return nv_; }
  const Quiver& quiver() const { return q_; }

  std::size_t vertex_elem(std::size_t v) const { return v; }
  std::size_t arrow_elem(std::size_t a) const { return nv_ + a; }
  bool is_radical(std::size_t i) const { return i >= nv_; }

  /// Basis product as an index, or -1 when the product is zero.
  int product(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }

  /// Endpoints of a basis element (vertices are loops at themselves).
  std::int32_t src_of(std::size_t i) const;
  std::int32_t tgt_of(std::size_t i) const;

  /// "e_v" / arrow ids, for diagnostics.
  std::string label(std::size_t i) const;

  RatVec unit() const;
  RatVec mul(const RatVec& x, const RatVec& y) const;
  RatVec mul_basis_vec(std::size_t k, const RatVec& v) const;
  RatVec mul_vec_basis(const RatVec& v, std::size_t k) const;

private:
  Quiver q_;
  std::size_t nv_ = 0;
  std::vector<int> table_;
};

FiniteAlgebra build_algebra(const Quiver& q);

/// A multilinear map A^(x arity) -> A tabulated on basis tuples
/// (row-major, first argument most significant).  Flat table layout:
/// entry(tuple, out) = table[tuple * dim + out].
class MultilinearMap {
public:
  MultilinearMap(std::size_t dim, std::size_t arity,
                 std::uint64_t budget = kDefaultBarBudget);

  std::size_t dim() const { return dim_; }
  std::size_t arity() const { return arity_; }
  std::size_t tuples() const { return tuples_; }
  const std::vector<Rational>& table() const { return table_; }

  Rational& entry(std::size_t tuple, std::size_t out) { return table_[tuple * dim_ + out]; }
  const Rational& entry(std::size_t tuple, std::size_t out) const {
    return table_[tuple * dim_ + out];
  }
  /// Value on the basis tuple as a vector in A.
  RatVec eval(std::size_t tuple) const;
  void set(std::size_t tuple, const RatVec& v);

  std::size_t tuple_index(const std::vector<std::size_t>& elems) const;
  std::vector<std::size_t> tuple_at(std::size_t idx) const;

  MultilinearMap& operator+=(const MultilinearMap& o);
  MultilinearMap& operator-=(const MultilinearMap& o);
  MultilinearMap& operator*=(const Rational& c);
  bool is_zero() const;
  bool operator==(const MultilinearMap&) const = default;

private:
  std::size_t dim_ = 0, arity_ = 0, tuples_ = 1;
  std::vector<Rational> table_;
};

/// An E-compatible map r^(x_E arity) -> A: one value per length-`arity`
/// path, supported on the basis elements parallel to that path.  For
/// arity 0 the "paths" are the trivial paths, so this is a tuple of
/// diagonal values (an element of A^E).
class ReducedMap {
public:
  ReducedMap(const FiniteAlgebra& a, std::size_t arity,
             std::uint64_t budget = kDefaultBasisBudget);

  std::size_t arity() const { return arity_; }
  std::size_t num_paths() const { return paths_.size(); }
  const Path& path_at(std::size_t i) const { return paths_.at(i); }
  std::size_t path_index(const Path& p) const;  // DomainError when absent
  const RatVec& value(std::size_t path_idx) const { return values_.at(path_idx); }

  /// Adds c * basis element k to the value at path_idx; throws DomainError
  /// unless k is parallel to the path.
  void add(std::size_t path_idx, std::size_t k, const Rational& c);

  ReducedMap& operator+=(const ReducedMap& o);
  ReducedMap& operator-=(const ReducedMap& o);
  ReducedMap& operator*=(const Rational& c);
  bool is_zero() const;
  bool operator==(const ReducedMap&) const = default;

private:
  std::size_t arity_ = 0;
  std::size_t dim_ = 0;
  std::size_t nv_ = 0;
  std::vector<Path> paths_;
  std::vector<RatVec> values_;
  std::vector<std::int32_t> esrc_, etgt_;  // endpoints per basis element
};

// ------------------------------------------------------------ full bar side

/// Hochschild differential on tabulated cochains:
///   (delta f)(x_1..x_{n+1}) = x_1 f(x_2..x_{n+1})
///     + sum_i (-1)^i f(.., x_i x_{i+1}, ..) + (-1)^{n+1} f(x_1..x_n) x_{n+1}.
MultilinearMap hochschild_delta(const FiniteAlgebra& a, const MultilinearMap& f,
                                std::uint64_t budget = kDefaultBarBudget);

/// Matrix of delta_n : C^n -> C^{n+1} over the flat table coordinates.
Matrix delta_matrix(const FiniteAlgebra& a, std::size_t n,
                    std::uint64_t budget = kDefaultBarBudget);

/// dim HH^n computed on the bar side: dim ker(delta_n) - rank(delta_{n-1}).
std::size_t bar_cohomology(const FiniteAlgebra& a, std::size_t n,
                           std::uint64_t budget = kDefaultBarBudget);

MultilinearMap bar_circ_i(const FiniteAlgebra& a, const MultilinearMap& f,
                          const MultilinearMap& g, std::size_t i,
                          std::uint64_t budget = kDefaultBarBudget);
MultilinearMap bar_circ(const FiniteAlgebra& a, const MultilinearMap& f,
                        const MultilinearMap& g,
                        std::uint64_t budget = kDefaultBarBudget);
MultilinearMap gerstenhaber_bracket_bar(const FiniteAlgebra& a, const MultilinearMap& f,
                                        const MultilinearMap& g,
                                        std::uint64_t budget = kDefaultBarBudget);

// ------------------------------------------------------------- reduced side

/// Reduced differential (middle terms die against r^2 = 0):
///   (delta f)(a_1..a_{n+1}) = a_1 f(a_2..) + (-1)^{n+1} f(..a_n) a_{n+1}.
ReducedMap reduced_delta(const FiniteAlgebra& a, const ReducedMap& f,
                         std::uint64_t budget = kDefaultBasisBudget);

ReducedMap reduced_circ_i(const FiniteAlgebra& a, const ReducedMap& f, const ReducedMap& g,
                          std::size_t i, std::uint64_t budget = kDefaultBasisBudget);
ReducedMap reduced_circ(const FiniteAlgebra& a, const ReducedMap& f, const ReducedMap& g,
                        std::uint64_t budget = kDefaultBasisBudget);
ReducedMap reduced_bracket(const FiniteAlgebra& a, const ReducedMap& f, const ReducedMap& g,
                           std::uint64_t budget = kDefaultBasisBudget);

// ------------------------------------------- comparison and transport maps

/// Inflation p: a reduced cochain becomes a full bar cochain: zero on any
/// tuple containing a vertex or a non-composable arrow word, the stored
/// value on composable words.
MultilinearMap p_cochain(const FiniteAlgebra& a, const ReducedMap& f,
                         std::uint64_t budget = kDefaultBarBudget);

/// Compression s: restrict a bar cochain to composable arrow words and cut
/// the output down to the parallel block: (sF)(gamma) = e_src F(...) e_tgt.
/// s(p(f)) = f for every reduced f.
ReducedMap s_cochain(const FiniteAlgebra& a, const MultilinearMap& f,
                     std::uint64_t budget = kDefaultBasisBudget);

/// The isomorphism with the combinatorial complex: (gamma, x) acts as the
/// indicator map gamma' |-> [gamma' == gamma] x.
ReducedMap from_cochain(const FiniteAlgebra& a, const Cochain& c,
                        std::uint64_t budget = kDefaultBasisBudget);
Cochain to_cochain(const FiniteAlgebra& a, const ReducedMap& f);

/// Checks the bracket transport identities for one pair:
///   p([f,g]_reduced) == [p f, p g]_bar  and  [f,g]_reduced == s([p f, p g]).
bool verify_transport(const FiniteAlgebra& a, const ReducedMap& f, const ReducedMap& g,
                      std::uint64_t budget = kDefaultBarBudget);

/// Uniformly random E-compatible map (small rational coefficients).
ReducedMap random_reduced_map(const FiniteAlgebra& a, std::size_t arity, Rng& rng,
                              std::uint64_t budget = kDefaultBasisBudget);

// ------------------------------------------------------------- cross-check

struct OracleReport {
  struct Line {
    std::string name;
    bool ok = false;
    std::string detail;
  };
  std::vector<Line> lines;
  bool ok() const;
};

/// Runs the whole referee suite against the combinatorial engine on one
/// quiver: algebra sanity, delta^2 = 0, dimension agreement for
/// n = 0..n_max, differential/bracket correspondence under the
/// isomorphism, s(p(f)) = id, chain-map naturality and bracket transport.
OracleReport oracle_crosscheck(const Quiver& q, std::size_t n_max, std::uint64_t seed = 1,
                               std::uint64_t bar_budget = kDefaultBarBudget,
                               std::uint64_t basis_budget = kDefaultBasisBudget);

}  // namespace qhh
