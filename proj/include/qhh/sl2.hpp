#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qhh/cochain.hpp"

namespace qhh {

/// The sl2/gl2 analysis is specific to the quiver with one vertex and two
/// loops; every entry point validates the shape.  By convention the first
/// arrow plays the role of `a` (weight +1) and the second of `b` (-1).

/// Degree-1 generators: E = (a,b), F = (b,a), H = (b,b) - (a,a),
/// I = (a,a) + (b,b).
Cochain sl2_E(const Quiver& q);
Cochain sl2_F(const Quiver& q);
Cochain sl2_H(const Quiver& q);
Cochain gl2_I(const Quiver& q);

/// Weight of a path: (#first arrow) - (#second arrow).
int weight(const Quiver& q, const Path& gamma);

enum class ProfileKind {
  total,       ///< the degree-n arrow-pair block k(Q_n || Q_1)
  image,       ///< Im D_{n-1} inside that block
  cohomology,  ///< their pointwise difference (valid: the image is
               ///< weight-homogeneous inside the block)
};

/// H-eigenvalue profile: weight t -> dimension of the weight-t component.
/// The pair (gamma, a) sits in weight v(gamma)-1 and (gamma, b) in
/// v(gamma)+1, so each path contributes to the profile at v-1 and v+1.
std::map<int, std::size_t> weight_profile(const Quiver& q, ProfileKind kind, std::size_t n,
                                          std::uint64_t budget = kDefaultBasisBudget);

/// Irreducible multiplicities q(n,l) of HH^n for l = 0..floor((n+1)/2):
/// q(n,l) = W(t) - W(t+2) with t = n+1-2l and W the cohomology profile.
/// V(t) then occurs q(n,l) times.  Requires n >= 1.
std::vector<long long> multiplicities(const Quiver& q, std::size_t n,
                                      std::uint64_t budget = kDefaultBasisBudget);

/// Closed form for q(n,l) by binomials:
///   [C(n+1,l) - C(n+1,l-1)] - [C(n-1,l-1) - C(n-1,l-2)]
/// where the second bracket (the image correction) is dropped for n = 1,
/// the one degree where the previous differential is not injective.
long long closed_form_q(std::size_t n, std::size_t l);

/// Decomposition table rows HH^n = (+)_l q(n,l) V(n+1-2l).
struct MultiplicityTable {
  std::size_t n_min = 2;
  /// rows[i][l] = q(n_min+i, l), l = 0..floor((n+2-i... see row_degree)
  std::vector<std::vector<long long>> rows;

  std::size_t n_max() const { return n_min + rows.size() - 1; }
  std::size_t row_degree(std::size_t i) const { return n_min + i; }
  /// Multiplicity of V(t) in HH^n (0 when V(t) cannot occur).
  long long count(std::size_t n, long long t) const;

  bool operator==(const MultiplicityTable&) const = default;
};

/// Table computed degree by degree from the cochain complex.
MultiplicityTable decompose_table(const Quiver& q, std::size_t n_lo, std::size_t n_hi,
                                  std::uint64_t budget = kDefaultBasisBudget);

/// Table grown combinatorially: the weight profile of HH^2 is
/// {±3: 1, ±1: 2}, and profiles propagate by the Pascal-style rule
/// next[t] = cur[t-1] + cur[t+1].  No quiver is consulted.
MultiplicityTable pascal_table(std::size_t n_max);

/// For every even n with 2 <= n <= n_max-1, the multiplicity of V(1) in
/// HH^n equals the multiplicity of V(0) in HH^{n+1} (odd rows have no V(1)
/// and even rows no V(0), so other degrees hold vacuously).
bool column_property_check(const Quiver& q, std::size_t n_max,
                           std::uint64_t budget = kDefaultBasisBudget);

/// Renderings of a multiplicity table.  Text mirrors the paper-style grid
/// (blank cells for zeros); CSV (`n,t,multiplicity`) and JSON list every
/// slot and round-trip through the matching parser.
std::string emit_table_text(const MultiplicityTable& t);
std::string emit_table_csv(const MultiplicityTable& t);
std::string emit_table_json(const MultiplicityTable& t);
MultiplicityTable parse_table_csv(const std::string& s);
MultiplicityTable parse_table_json(const std::string& s);

}  // namespace qhh
