#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qhh {

/// Default cap on |Q1|^n during path/basis enumeration.
inline constexpr std::uint64_t kDefaultBasisBudget = std::uint64_t{1} << 20;

struct Arrow {
  std::string id;
  std::int32_t src = 0;
  std::int32_t tgt = 0;

  bool operator==(const Arrow&) const = default;
};

/// A finite quiver.  Vertices and arrows are referred to by dense indices;
/// ids are kept for I/O.  Composition convention: in a word a1 a2 ... an the
/// leftmost arrow applies first, so consecutive arrows satisfy
/// tgt(a_i) = src(a_{i+1}).
class Quiver {
public:
  Quiver() = default;
  Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

  /// Single vertex "e" carrying `count` loops named a, b, c, ...
  /// (the running examples of the whole library).
  static Quiver loops(std::size_t count);

  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_arrows() const { return arrows_.size(); }
  const std::string& vertex_id(std::size_t v) const { return vertices_.at(v); }
  const Arrow& arrow(std::size_t a) const { return arrows_.at(a); }

  std::optional<std::size_t> vertex_index(const std::string& id) const;
  std::optional<std::size_t> arrow_index(const std::string& id) const;

  /// Arrows with the given target / source, in arrow order.
  const std::vector<std::int32_t>& arrows_into(std::size_t v) const { return into_.at(v); }
  const std::vector<std::int32_t>& arrows_out_of(std::size_t v) const { return out_.at(v); }

  bool operator==(const Quiver&) const = default;

private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::vector<std::vector<std::int32_t>> into_, out_;
};

/// Strict-schema parse of {"vertices": [...], "arrows": [{id,src,tgt}...]}.
/// Unknown fields, duplicate ids and dangling endpoints are ParseErrors.
Quiver parse_quiver(const std::string& json_text);

/// A path: a composable word of arrows, or a trivial path at a vertex.
/// Source/target are tracked so trivial paths know where they live.
class Path {
public:
  Path() = default;
  static Path trivial(std::int32_t vertex);
  /// Validates composability against q; throws DomainError.
  static Path word(const Quiver& q, std::vector<std::int32_t> arrows);

  std::size_t length() const { return arrows_.size(); }
  bool is_trivial() const { return arrows_.empty(); }
  std::int32_t source() const { return src_; }
  std::int32_t target() const { return tgt_; }
  const std::vector<std::int32_t>& arrows() const { return arrows_; }
  std::int32_t arrow_at(std::size_t i) const { return arrows_.at(i); }

  /// "aab" for words, "@e" for the trivial path at e.
  std::string str(const Quiver& q) const;

  bool operator==(const Path&) const = default;
  auto operator<=>(const Path&) const = default;

private:
  std::int32_t src_ = 0, tgt_ = 0;
  std::vector<std::int32_t> arrows_;
};

/// Basis element (gamma, x) of the combinatorial cochain spaces: a path and
/// a parallel vertex or arrow (same source and target as gamma).
struct ParallelPair {
  Path gamma;
  bool x_is_vertex = true;
  std::int32_t x = 0;

  /// Validated constructor; throws DomainError unless x is parallel to gamma.
  static ParallelPair make(const Quiver& q, Path gamma, bool x_is_vertex, std::int32_t x);

  /// "(aab, a)" / "(aab, @e)".
  std::string str(const Quiver& q) const;

  bool operator==(const ParallelPair&) const = default;
  /// Basis order: vertex-shortcut pairs first, then by path, then by x.
  std::strong_ordering operator<=>(const ParallelPair& o) const {
    if (auto c = (x_is_vertex ? 0 : 1) <=> (o.x_is_vertex ? 0 : 1); c != 0) return c;
    if (auto c = gamma <=> o.gamma; c != 0) return c;
    return x <=> o.x;
  }
};

/// All length-n paths, in lexicographic word order (n = 0: one trivial path
/// per vertex, in vertex order).  Refuses when |Q1|^n > budget.
std::vector<Path> enumerate_paths(const Quiver& q, std::size_t n,
                                  std::uint64_t budget = kDefaultBasisBudget);

enum class PairKind { vertex, arrow };

/// All pairs (gamma, x) with gamma of length n and x a vertex or arrow
/// parallel to gamma; path-major order, x ascending within a path.
std::vector<ParallelPair> parallel_pairs(const Quiver& q, std::size_t n, PairKind kind,
                                         std::uint64_t budget = kDefaultBasisBudget);

/// Replace the i-th arrow of alpha (1-based) by the parallel path beta.
/// Throws DomainError when i is out of range or beta is not parallel to
/// that arrow.
Path substitute(const Quiver& q, const Path& alpha, std::size_t i, const Path& beta);

}  // namespace qhh
