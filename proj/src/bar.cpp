#include "qhh/bar.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "qhh/bracket.hpp"
#include "qhh/errors.hpp"

namespace qhh {

// ------------------------------------------------------------ FiniteAlgebra

FiniteAlgebra::FiniteAlgebra(const Quiver& q) : q_(q), nv_(q.num_vertices()) {
  const std::size_t d = dim();
  table_.assign(d * d, -1);
  auto at = [this, d](std::size_t i, std::size_t j) -> int& { return table_[i * d + j]; };
  for (std::size_t v = 0; v < nv_; ++v) at(v, v) = static_cast<int>(v);
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    const Arrow& ar = q.arrow(a);
    // e_src a = a and a e_tgt = a; arrow * arrow dies against r^2 = 0.
    at(ar.src, nv_ + a) = static_cast<int>(nv_ + a);
    at(nv_ + a, ar.tgt) = static_cast<int>(nv_ + a);
  }
}

std::int32_t FiniteAlgebra::src_of(std::size_t i) const {
  return is_radical(i) ? q_.arrow(i - nv_).src : static_cast<std::int32_t>(i);
}

std::int32_t FiniteAlgebra::tgt_of(std::size_t i) const {
  return is_radical(i) ? q_.arrow(i - nv_).tgt : static_cast<std::int32_t>(i);
}

std::string FiniteAlgebra::label(std::size_t i) const {
  return is_radical(i) ? q_.arrow(i - nv_).id : "e_" + q_.vertex_id(i);
}

RatVec FiniteAlgebra::unit() const {
  RatVec u(dim());
  for (std::size_t v = 0; v < nv_; ++v) u[v] = Rational(1);
  return u;
}

RatVec FiniteAlgebra::mul(const RatVec& x, const RatVec& y) const {
  RatVec r(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (y[j].is_zero()) continue;
      int p = product(i, j);
      if (p >= 0) r[p] += x[i] * y[j];
    }
  }
  return r;
}

RatVec FiniteAlgebra::mul_basis_vec(std::size_t k, const RatVec& v) const {
  RatVec r(dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    if (v[j].is_zero()) continue;
    int p = product(k, j);
    if (p >= 0) r[p] += v[j];
  }
  return r;
}

RatVec FiniteAlgebra::mul_vec_basis(const RatVec& v, std::size_t k) const {
  RatVec r(dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    if (v[j].is_zero()) continue;
    int p = product(j, k);
    if (p >= 0) r[p] += v[j];
  }
  return r;
}

FiniteAlgebra build_algebra(const Quiver& q) { return FiniteAlgebra(q); }

// ----------------------------------------------------------- MultilinearMap

MultilinearMap::MultilinearMap(std::size_t dim, std::size_t arity, std::uint64_t budget)
    : dim_(dim), arity_(arity) {
  std::uint64_t scalars = dim;  // dim^(arity+1)
  for (std::size_t i = 0; i < arity; ++i) {
    if (dim != 0 && scalars > budget / dim)
      throw BudgetError("bar: map table (dim " + std::to_string(dim) + ")^" +
                        std::to_string(arity + 1) + " exceeds budget " +
                        std::to_string(budget));
    scalars *= dim;
    tuples_ *= dim;
  }
  if (scalars > budget)
    throw BudgetError("bar: map table (dim " + std::to_string(dim) + ")^" +
                      std::to_string(arity + 1) + " exceeds budget " +
                      std::to_string(budget));
  table_.assign(tuples_ * dim_, Rational(0));
}

RatVec MultilinearMap::eval(std::size_t tuple) const {
  RatVec v(dim_);
  for (std::size_t o = 0; o < dim_; ++o) v[o] = entry(tuple, o);
  return v;
}

void MultilinearMap::set(std::size_t tuple, const RatVec& v) {
  for (std::size_t o = 0; o < dim_; ++o) entry(tuple, o) = v[o];
}

std::size_t MultilinearMap::tuple_index(const std::vector<std::size_t>& elems) const {
  if (elems.size() != arity_) throw DomainError("bar: tuple arity mismatch");
  std::size_t idx = 0;
  for (std::size_t e : elems) {
    if (e >= dim_) throw DomainError("bar: basis index out of range");
    idx = idx * dim_ + e;
  }
  return idx;
}

std::vector<std::size_t> MultilinearMap::tuple_at(std::size_t idx) const {
  std::vector<std::size_t> elems(arity_);
  for (std::size_t i = arity_; i-- > 0;) {
    elems[i] = idx % dim_;
    idx /= dim_;
  }
  return elems;
}

MultilinearMap& MultilinearMap::operator+=(const MultilinearMap& o) {
  if (o.dim_ != dim_ || o.arity_ != arity_) throw DomainError("bar: shape mismatch in +");
  for (std::size_t i = 0; i < table_.size(); ++i) table_[i] += o.table_[i];
  return *this;
}

MultilinearMap& MultilinearMap::operator-=(const MultilinearMap& o) {
  if (o.dim_ != dim_ || o.arity_ != arity_) throw DomainError("bar: shape mismatch in -");
  for (std::size_t i = 0; i < table_.size(); ++i) table_[i] -= o.table_[i];
  return *this;
}

MultilinearMap& MultilinearMap::operator*=(const Rational& c) {
  for (Rational& v : table_) v *= c;
  return *this;
}

bool MultilinearMap::is_zero() const {
  return std::all_of(table_.begin(), table_.end(),
                     [](const Rational& v) { return v.is_zero(); });
}

// --------------------------------------------------------------- ReducedMap

ReducedMap::ReducedMap(const FiniteAlgebra& a, std::size_t arity, std::uint64_t budget)
    : arity_(arity), dim_(a.dim()), nv_(a.num_vertices()) {
  paths_ = enumerate_paths(a.quiver(), arity, budget);
  values_.assign(paths_.size(), RatVec(dim_));
  esrc_.resize(dim_);
  etgt_.resize(dim_);
  for (std::size_t k = 0; k < dim_; ++k) {
    esrc_[k] = a.src_of(k);
    etgt_[k] = a.tgt_of(k);
  }
}

std::size_t ReducedMap::path_index(const Path& p) const {
  auto it = std::lower_bound(paths_.begin(), paths_.end(), p);
  if (it == paths_.end() || !(*it == p))
    throw DomainError("bar: not a length-" + std::to_string(arity_) + " path");
  return static_cast<std::size_t>(it - paths_.begin());
}

void ReducedMap::add(std::size_t path_idx, std::size_t k, const Rational& c) {
  const Path& p = paths_.at(path_idx);
  if (k >= dim_ || esrc_[k] != p.source() || etgt_[k] != p.target())
    throw DomainError("bar: value component not parallel to its path");
  values_[path_idx][k] += c;
}

ReducedMap& ReducedMap::operator+=(const ReducedMap& o) {
  if (o.arity_ != arity_ || o.paths_ != paths_)
    throw DomainError("bar: shape mismatch in reduced +");
  for (std::size_t j = 0; j < values_.size(); ++j)
    for (std::size_t k = 0; k < dim_; ++k) values_[j][k] += o.values_[j][k];
  return *this;
}

ReducedMap& ReducedMap::operator-=(const ReducedMap& o) {
  if (o.arity_ != arity_ || o.paths_ != paths_)
    throw DomainError("bar: shape mismatch in reduced -");
  for (std::size_t j = 0; j < values_.size(); ++j)
    for (std::size_t k = 0; k < dim_; ++k) values_[j][k] -= o.values_[j][k];
  return *this;
}

ReducedMap& ReducedMap::operator*=(const Rational& c) {
  for (RatVec& v : values_)
    for (Rational& x : v) x *= c;
  return *this;
}

bool ReducedMap::is_zero() const {
  for (const RatVec& v : values_)
    for (const Rational& x : v)
      if (!x.is_zero()) return false;
  return true;
}

// ------------------------------------------------------------ full bar side

MultilinearMap hochschild_delta(const FiniteAlgebra& a, const MultilinearMap& f,
                                std::uint64_t budget) {
  const std::size_t d = a.dim(), n = f.arity();
  MultilinearMap out(d, n + 1, budget);
  for (std::size_t t = 0; t < out.tuples(); ++t) {
    std::vector<std::size_t> xs = out.tuple_at(t);
    RatVec acc(d);

    // x_1 f(x_2 .. x_{n+1})
    {
      std::vector<std::size_t> rest(xs.begin() + 1, xs.end());
      RatVec v = a.mul_basis_vec(xs[0], f.eval(f.tuple_index(rest)));
      for (std::size_t o = 0; o < d; ++o) acc[o] += v[o];
    }
    // (-1)^i f(x_1, .., x_i x_{i+1}, .., x_{n+1})
    for (std::size_t i = 1; i <= n; ++i) {
      int p = a.product(xs[i - 1], xs[i]);
      if (p < 0) continue;
      std::vector<std::size_t> merged;
      merged.reserve(n);
      merged.insert(merged.end(), xs.begin(), xs.begin() + (i - 1));
      merged.push_back(static_cast<std::size_t>(p));
      merged.insert(merged.end(), xs.begin() + (i + 1), xs.end());
      RatVec v = f.eval(f.tuple_index(merged));
      const Rational sign = (i % 2 == 0) ? Rational(1) : Rational(-1);
      for (std::size_t o = 0; o < d; ++o) acc[o] += sign * v[o];
    }
    // (-1)^{n+1} f(x_1 .. x_n) x_{n+1}
    {
      std::vector<std::size_t> init(xs.begin(), xs.end() - 1);
      RatVec v = a.mul_vec_basis(f.eval(f.tuple_index(init)), xs.back());
      const Rational sign = ((n + 1) % 2 == 0) ? Rational(1) : Rational(-1);
      for (std::size_t o = 0; o < d; ++o) acc[o] += sign * v[o];
    }
    out.set(t, acc);
  }
  return out;
}

Matrix delta_matrix(const FiniteAlgebra& a, std::size_t n, std::uint64_t budget) {
  const std::size_t d = a.dim();
  MultilinearMap basis(d, n, budget);
  const std::size_t cols = basis.tuples() * d;
  // Probe the output shape once (also enforces the budget for arity n+1).
  MultilinearMap probe = hochschild_delta(a, basis, budget);
  Matrix m(probe.table().size(), cols);
  for (std::size_t t = 0; t < basis.tuples(); ++t)
    for (std::size_t o = 0; o < d; ++o) {
      MultilinearMap unit(d, n, budget);
      unit.entry(t, o) = Rational(1);
      MultilinearMap du = hochschild_delta(a, unit, budget);
      const std::size_t col = t * d + o;
      const auto& flat = du.table();
      for (std::size_t r = 0; r < flat.size(); ++r)
        if (!flat[r].is_zero()) m.at(r, col) = flat[r];
    }
  return m;
}

std::size_t bar_cohomology(const FiniteAlgebra& a, std::size_t n, std::uint64_t budget) {
  Matrix dn = delta_matrix(a, n, budget);
  std::vector<SparseVec> cols = dn.sparse_cols();
  const std::size_t rank_n = rref_rows(cols).size();
  std::size_t rank_prev = 0;
  if (n > 0) {
    Matrix dp = delta_matrix(a, n - 1, budget);
    std::vector<SparseVec> pcols = dp.sparse_cols();
    rank_prev = rref_rows(pcols).size();
  }
  return dn.cols() - rank_n - rank_prev;
}

MultilinearMap bar_circ_i(const FiniteAlgebra& a, const MultilinearMap& f,
                          const MultilinearMap& g, std::size_t i, std::uint64_t budget) {
  const std::size_t d = a.dim(), n = f.arity(), m = g.arity();
  if (i < 1 || i > n)
    throw DomainError("bar: slot " + std::to_string(i) + " outside 1.." + std::to_string(n));
  MultilinearMap out(d, n + m - 1, budget);
  for (std::size_t t = 0; t < out.tuples(); ++t) {
    std::vector<std::size_t> xs = out.tuple_at(t);
    std::vector<std::size_t> window(xs.begin() + (i - 1), xs.begin() + (i - 1 + m));
    RatVec vg = g.eval(g.tuple_index(window));
    RatVec acc(d);
    std::vector<std::size_t> inner(xs.begin(), xs.begin() + (i - 1));
    inner.push_back(0);
    inner.insert(inner.end(), xs.begin() + (i - 1 + m), xs.end());
    for (std::size_t k = 0; k < d; ++k) {
      if (vg[k].is_zero()) continue;
      inner[i - 1] = k;
      RatVec vf = f.eval(f.tuple_index(inner));
      for (std::size_t o = 0; o < d; ++o) acc[o] += vg[k] * vf[o];
    }
    out.set(t, acc);
  }
  return out;
}

MultilinearMap bar_circ(const FiniteAlgebra& a, const MultilinearMap& f,
                        const MultilinearMap& g, std::uint64_t budget) {
  const std::size_t n = f.arity(), m = g.arity();
  if (n < 1) throw DomainError("bar: circ needs arity >= 1 on the left");
  MultilinearMap out(a.dim(), n + m - 1, budget);
  for (std::size_t i = 1; i <= n; ++i) {
    MultilinearMap term = bar_circ_i(a, f, g, i, budget);
    if ((i - 1) * (m + 1) % 2 != 0) term *= Rational(-1);  // (-1)^((i-1)(m-1))
    out += term;
  }
  return out;
}

MultilinearMap gerstenhaber_bracket_bar(const FiniteAlgebra& a, const MultilinearMap& f,
                                        const MultilinearMap& g, std::uint64_t budget) {
  const std::size_t n = f.arity(), m = g.arity();
  if (n < 1 || m < 1) throw DomainError("bar: bracket needs arities >= 1");
  MultilinearMap out = bar_circ(a, f, g, budget);
  MultilinearMap rev = bar_circ(a, g, f, budget);
  if ((n - 1) * (m - 1) % 2 != 0) rev *= Rational(-1);
  out -= rev;
  return out;
}

// ------------------------------------------------------------- reduced side

namespace {

Path word_slice(const Quiver& q, const std::vector<std::int32_t>& w, std::size_t b,
                std::size_t e, std::int32_t vertex_if_empty) {
  if (b >= e) return Path::trivial(vertex_if_empty);
  return Path::word(q, std::vector<std::int32_t>(w.begin() + b, w.begin() + e));
}

}  // namespace

ReducedMap reduced_delta(const FiniteAlgebra& a, const ReducedMap& f, std::uint64_t budget) {
  const Quiver& q = a.quiver();
  const std::size_t n = f.arity();
  ReducedMap out(a, n + 1, budget);
  const Rational last_sign = ((n + 1) % 2 == 0) ? Rational(1) : Rational(-1);
  for (std::size_t j = 0; j < out.num_paths(); ++j) {
    const Path& rho = out.path_at(j);
    const auto& w = rho.arrows();
    const std::int32_t first = w.front(), last = w.back();

    Path tail = word_slice(q, w, 1, w.size(), q.arrow(first).tgt);
    RatVec v1 = a.mul_basis_vec(a.arrow_elem(first), f.value(f.path_index(tail)));
    Path init = word_slice(q, w, 0, w.size() - 1, q.arrow(last).src);
    RatVec v2 = a.mul_vec_basis(f.value(f.path_index(init)), a.arrow_elem(last));

    for (std::size_t k = 0; k < a.dim(); ++k) {
      Rational c = v1[k] + last_sign * v2[k];
      if (!c.is_zero()) out.add(j, k, c);
    }
  }
  return out;
}

ReducedMap reduced_circ_i(const FiniteAlgebra& a, const ReducedMap& f, const ReducedMap& g,
                          std::size_t i, std::uint64_t budget) {
  const Quiver& q = a.quiver();
  const std::size_t n = f.arity(), m = g.arity();
  if (i < 1 || i > n)
    throw DomainError("bar: slot " + std::to_string(i) + " outside 1.." + std::to_string(n));
  ReducedMap out(a, n + m - 1, budget);
  for (std::size_t j = 0; j < out.num_paths(); ++j) {
    const Path& rho = out.path_at(j);
    const auto& w = rho.arrows();
    // rho = pre | mid (m arrows) | suf with |pre| = i-1.
    std::int32_t junction =
        (i >= 2) ? q.arrow(w[i - 2]).tgt : rho.source();
    Path mid = word_slice(q, w, i - 1, i - 1 + m, junction);
    const RatVec& vg = g.value(g.path_index(mid));
    for (std::size_t k = a.num_vertices(); k < a.dim(); ++k) {
      // Only radical components survive the inner projection.
      if (vg[k].is_zero()) continue;
      std::vector<std::int32_t> spliced(w.begin(), w.begin() + (i - 1));
      spliced.push_back(static_cast<std::int32_t>(k - a.num_vertices()));
      spliced.insert(spliced.end(), w.begin() + (i - 1 + m), w.end());
      const RatVec& vf = f.value(f.path_index(Path::word(q, spliced)));
      for (std::size_t o = 0; o < a.dim(); ++o)
        if (!vf[o].is_zero()) out.add(j, o, vg[k] * vf[o]);
    }
  }
  return out;
}

ReducedMap reduced_circ(const FiniteAlgebra& a, const ReducedMap& f, const ReducedMap& g,
                        std::uint64_t budget) {
  const std::size_t n = f.arity(), m = g.arity();
  if (n < 1) throw DomainError("bar: circ needs arity >= 1 on the left");
  ReducedMap out(a, n + m - 1, budget);
  for (std::size_t i = 1; i <= n; ++i) {
    ReducedMap term = reduced_circ_i(a, f, g, i, budget);
    if ((i - 1) * (m + 1) % 2 != 0) term *= Rational(-1);
    out += term;
  }
  return out;
}

ReducedMap reduced_bracket(const FiniteAlgebra& a, const ReducedMap& f, const ReducedMap& g,
                           std::uint64_t budget) {
  const std::size_t n = f.arity(), m = g.arity();
  if (n < 1 || m < 1) throw DomainError("bar: bracket needs arities >= 1");
  ReducedMap out = reduced_circ(a, f, g, budget);
  ReducedMap rev = reduced_circ(a, g, f, budget);
  if ((n - 1) * (m - 1) % 2 != 0) rev *= Rational(-1);
  out -= rev;
  return out;
}

// ------------------------------------------- comparison and transport maps

MultilinearMap p_cochain(const FiniteAlgebra& a, const ReducedMap& f, std::uint64_t budget) {
  MultilinearMap out(a.dim(), f.arity(), budget);
  for (std::size_t j = 0; j < f.num_paths(); ++j) {
    std::vector<std::size_t> tuple;
    for (std::int32_t arrow : f.path_at(j).arrows()) tuple.push_back(a.arrow_elem(arrow));
    const std::size_t t = out.tuple_index(tuple);
    const RatVec& v = f.value(j);
    for (std::size_t o = 0; o < a.dim(); ++o) out.entry(t, o) += v[o];
  }
  return out;
}

ReducedMap s_cochain(const FiniteAlgebra& a, const MultilinearMap& f, std::uint64_t budget) {
  if (f.dim() != a.dim()) throw DomainError("bar: map/algebra dimension mismatch");
  ReducedMap out(a, f.arity(), budget);
  for (std::size_t j = 0; j < out.num_paths(); ++j) {
    const Path& p = out.path_at(j);
    std::vector<std::size_t> tuple;
    for (std::int32_t arrow : p.arrows()) tuple.push_back(a.arrow_elem(arrow));
    RatVec v = f.eval(f.tuple_index(tuple));
    for (std::size_t k = 0; k < a.dim(); ++k)
      if (!v[k].is_zero() && a.src_of(k) == p.source() && a.tgt_of(k) == p.target())
        out.add(j, k, v[k]);
  }
  return out;
}

ReducedMap from_cochain(const FiniteAlgebra& a, const Cochain& c, std::uint64_t budget) {
  ReducedMap out(a, c.degree(), budget);
  for (const auto& [pair, coef] : c.terms()) {
    std::size_t j = out.path_index(pair.gamma);
    std::size_t k = pair.x_is_vertex ? a.vertex_elem(pair.x) : a.arrow_elem(pair.x);
    out.add(j, k, coef);
  }
  return out;
}

Cochain to_cochain(const FiniteAlgebra& a, const ReducedMap& f) {
  const Quiver& q = a.quiver();
  Cochain c(f.arity());
  for (std::size_t j = 0; j < f.num_paths(); ++j) {
    const RatVec& v = f.value(j);
    for (std::size_t k = 0; k < a.dim(); ++k) {
      if (v[k].is_zero()) continue;
      bool is_vertex = !a.is_radical(k);
      std::int32_t x = is_vertex ? static_cast<std::int32_t>(k)
                                 : static_cast<std::int32_t>(k - a.num_vertices());
      c.add(ParallelPair::make(q, f.path_at(j), is_vertex, x), v[k]);
    }
  }
  return c;
}

bool verify_transport(const FiniteAlgebra& a, const ReducedMap& f, const ReducedMap& g,
                      std::uint64_t budget) {
  ReducedMap br = reduced_bracket(a, f, g);
  MultilinearMap pf = p_cochain(a, f, budget);
  MultilinearMap pg = p_cochain(a, g, budget);
  MultilinearMap bar = gerstenhaber_bracket_bar(a, pf, pg, budget);
  return p_cochain(a, br, budget) == bar && s_cochain(a, bar) == br;
}

ReducedMap random_reduced_map(const FiniteAlgebra& a, std::size_t arity, Rng& rng,
                              std::uint64_t budget) {
  ReducedMap out(a, arity, budget);
  for (std::size_t j = 0; j < out.num_paths(); ++j) {
    const Path& p = out.path_at(j);
    for (std::size_t k = 0; k < a.dim(); ++k) {
      if (a.src_of(k) != p.source() || a.tgt_of(k) != p.target()) continue;
      if (rng.below(2) == 0) continue;
      Rational c(rng.range(-3, 3), rng.range(1, 2));
      if (!c.is_zero()) out.add(j, k, c);
    }
  }
  return out;
}

// -------------------------------------------------------------- cross-check

bool OracleReport::ok() const {
  return std::all_of(lines.begin(), lines.end(), [](const Line& l) { return l.ok; });
}

namespace {

MultilinearMap random_multilinear(const FiniteAlgebra& a, std::size_t arity, Rng& rng,
                                  std::uint64_t budget) {
  MultilinearMap f(a.dim(), arity, budget);
  for (std::size_t t = 0; t < f.tuples(); ++t)
    for (std::size_t o = 0; o < a.dim(); ++o)
      if (rng.below(3) == 0) f.entry(t, o) = Rational(rng.range(-3, 3), rng.range(1, 2));
  return f;
}

Cochain random_cochain_of(const CochainSpace& space, Rng& rng) {
  Cochain c(space.degree());
  if (space.dim() == 0) return c;
  std::size_t terms = 1 + rng.below(4);
  for (std::size_t t = 0; t < terms; ++t)
    c.add(space.pair_at(rng.below(space.dim())), Rational(rng.range(-3, 3), rng.range(1, 2)));
  return c;
}

std::string join_dims(const std::vector<std::size_t>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

}  // namespace

OracleReport oracle_crosscheck(const Quiver& q, std::size_t n_max, std::uint64_t seed,
                               std::uint64_t bar_budget, std::uint64_t basis_budget) {
  OracleReport report;
  auto line = [&report](const std::string& name, bool ok, std::string detail = "") {
    report.lines.push_back({name, ok, std::move(detail)});
  };
  FiniteAlgebra a = build_algebra(q);
  const std::size_t d = a.dim();
  Rng rng(seed);

  // Largest map arity the budget allows: d^(arity+1) <= bar_budget.
  std::size_t max_arity = 0;
  for (std::uint64_t scalars = d * d; scalars <= bar_budget && max_arity < 16;
       scalars *= d)
    ++max_arity;

  {
    // Multiplication table sanity: unit, associativity, vanishing radical square.
    bool ok = true;
    RatVec u = a.unit();
    for (std::size_t i = 0; i < d && ok; ++i) {
      RatVec x(d);
      x[i] = Rational(1);
      ok = a.mul(u, x) == x && a.mul(x, u) == x;
    }
    for (std::size_t i = 0; i < d && ok; ++i)
      for (std::size_t j = 0; j < d && ok; ++j) {
        if (a.is_radical(i) && a.is_radical(j) && a.product(i, j) >= 0) ok = false;
        for (std::size_t k = 0; k < d && ok; ++k) {
          int ij = a.product(i, j), jk = a.product(j, k);
          int l = (ij < 0) ? -1 : a.product(ij, k);
          int r = (jk < 0) ? -1 : a.product(i, jk);
          ok = (l == r);
        }
      }
    line("algebra table", ok,
         "dim " + std::to_string(d) + ", associative, unit, r^2 = 0");
  }

  {
    // delta . delta = 0 on random tabulated cochains.
    bool ok = true;
    std::size_t cases = 0;
    for (std::size_t n = 0; n + 2 <= max_arity; ++n)
      for (int it = 0; it < 5; ++it, ++cases) {
        MultilinearMap f = random_multilinear(a, n, rng, bar_budget);
        if (!hochschild_delta(a, hochschild_delta(a, f, bar_budget), bar_budget).is_zero())
          ok = false;
      }
    line("bar delta squared", ok, std::to_string(cases) + " random cochains");
  }

  std::vector<std::size_t> bar_dims, comb_dims;
  {
    bool ok = true;
    std::string err;
    try {
      comb_dims = hh_dim_table(q, n_max, basis_budget);
      for (std::size_t n = 0; n <= n_max; ++n)
        bar_dims.push_back(bar_cohomology(a, n, bar_budget));
      ok = bar_dims == comb_dims;
    } catch (const Error& e) {
      ok = false;
      err = e.what();
    }
    line("dimension agreement", ok,
         err.empty() ? ("n = 0.." + std::to_string(n_max) + ": " + join_dims(bar_dims))
                     : err);
  }

  {
    // The isomorphism intertwines the differentials (this is what forces
    // the combinatorial differential to kill the arrow block).
    bool ok = true;
    for (std::size_t n = 0; n <= n_max; ++n) {
      CochainSpace space(q, n, basis_budget);
      for (int it = 0; it < 10; ++it) {
        Cochain c = random_cochain_of(space, rng);
        if (to_cochain(a, from_cochain(a, c)) != c) ok = false;
        ReducedMap lhs = from_cochain(a, apply_differential(q, c));
        ReducedMap rhs = reduced_delta(a, from_cochain(a, c));
        if (!(lhs == rhs)) ok = false;
      }
    }
    line("differential transport", ok, "reduced delta == combinatorial D");
  }

  {
    // Chain map: delta_bar(p f) = p(delta_reduced f).
    bool ok = true;
    std::size_t cases = 0;
    for (std::size_t n = 0; n + 2 <= max_arity; ++n)
      for (int it = 0; it < 5; ++it, ++cases) {
        ReducedMap f = random_reduced_map(a, n, rng, basis_budget);
        MultilinearMap lhs = hochschild_delta(a, p_cochain(a, f, bar_budget), bar_budget);
        MultilinearMap rhs = p_cochain(a, reduced_delta(a, f), bar_budget);
        if (!(lhs == rhs)) ok = false;
      }
    line("comparison chain map", ok, std::to_string(cases) + " random maps");
  }

  {
    // s p = id.
    bool ok = true;
    std::size_t cases = 0;
    for (std::size_t n = 0; n + 1 <= max_arity + 1 && n <= n_max; ++n)
      for (int it = 0; it < 10; ++it, ++cases) {
        ReducedMap f = random_reduced_map(a, n, rng, basis_budget);
        if (!(s_cochain(a, p_cochain(a, f, bar_budget)) == f)) ok = false;
      }
    line("s after p", ok, std::to_string(cases) + " random maps");
  }

  {
    // Combinatorial bracket == reduced bracket under the isomorphism.
    bool ok = true;
    std::size_t cases = 0;
    for (std::size_t n = 1; n <= 3 && n <= n_max; ++n)
      for (std::size_t m = 1; m + n - 1 <= n_max && m <= 3; ++m)
        for (int it = 0; it < 5; ++it, ++cases) {
          CochainSpace sn(q, n, basis_budget), sm(q, m, basis_budget);
          Cochain c1 = random_cochain_of(sn, rng), c2 = random_cochain_of(sm, rng);
          ReducedMap lhs = from_cochain(a, bracket_q(q, c1, c2));
          ReducedMap rhs =
              reduced_bracket(a, from_cochain(a, c1), from_cochain(a, c2), basis_budget);
          if (!(lhs == rhs)) ok = false;
        }
    line("bracket correspondence", ok, std::to_string(cases) + " random pairs");
  }

  {
    // Transport of the bracket through p and s.
    bool ok = true;
    std::size_t cases = 0;
    for (std::size_t n = 1; n <= 2; ++n)
      for (std::size_t m = 1; m <= 2; ++m) {
        if (n + m - 1 > max_arity || n > max_arity || m > max_arity) continue;
        for (int it = 0; it < 5; ++it, ++cases) {
          ReducedMap f = random_reduced_map(a, n, rng, basis_budget);
          ReducedMap g = random_reduced_map(a, m, rng, basis_budget);
          if (!verify_transport(a, f, g, bar_budget)) ok = false;
        }
      }
    line("bracket transport", ok, std::to_string(cases) + " random pairs");
  }

  return report;
}

}  // namespace qhh
