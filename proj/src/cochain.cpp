#include "qhh/cochain.hpp"

#include <stdexcept>

#include "qhh/errors.hpp"

namespace qhh {

// ------------------------------------------------------------- CochainSpace

CochainSpace::CochainSpace(const Quiver& q, std::size_t degree, std::uint64_t budget)
    : degree_(degree) {
  std::vector<Path> paths = enumerate_paths(q, degree, budget);
  for (const Path& p : paths)
    if (p.source() == p.target())
      basis_.push_back(ParallelPair::make(q, p, true, p.source()));
  vertex_block_ = basis_.size();
  for (const Path& p : paths)
    for (std::size_t a = 0; a < q.num_arrows(); ++a)
      if (q.arrow(a).src == p.source() && q.arrow(a).tgt == p.target())
        basis_.push_back(ParallelPair::make(q, p, false, static_cast<std::int32_t>(a)));
  for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);
}

std::optional<std::size_t> CochainSpace::find(const ParallelPair& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t CochainSpace::index_of(const ParallelPair& p) const {
  auto i = find(p);
  if (!i) throw DomainError("cochain space: pair is not a degree-" +
                            std::to_string(degree_) + " basis element");
  return *i;
}

// ------------------------------------------------------------------ Cochain

Cochain Cochain::of(std::size_t degree, const ParallelPair& p, const Rational& coef) {
  Cochain c(degree);
  c.add(p, coef);
  return c;
}

Rational Cochain::coef(const ParallelPair& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Cochain::add(const ParallelPair& p, const Rational& c) {
  if (p.gamma.length() != degree_)
    throw DomainError("cochain: mixing degrees " + std::to_string(degree_) + " and " +
                      std::to_string(p.gamma.length()));
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Cochain& Cochain::operator+=(const Cochain& o) {
  if (o.degree_ != degree_) throw DomainError("cochain: adding different degrees");
  for (const auto& [p, c] : o.terms_) add(p, c);
  return *this;
}

Cochain& Cochain::operator-=(const Cochain& o) {
  if (o.degree_ != degree_) throw DomainError("cochain: subtracting different degrees");
  for (const auto& [p, c] : o.terms_) add(p, -c);
  return *this;
}

Cochain& Cochain::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, v] : terms_) v *= c;
  return *this;
}

Cochain Cochain::operator-() const {
  Cochain r(degree_);
  for (const auto& [p, c] : terms_) r.terms_.emplace(p, -c);
  return r;
}

SparseVec to_coords(const CochainSpace& s, const Cochain& c) {
  if (c.degree() != s.degree()) throw DomainError("to_coords: degree mismatch");
  SparseVec v;
  for (const auto& [p, coef] : c.terms())
    v.terms.emplace_back(static_cast<std::uint32_t>(s.index_of(p)), coef);
  std::sort(v.terms.begin(), v.terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return v;
}

Cochain from_coords(const CochainSpace& s, const SparseVec& v) {
  Cochain c(s.degree());
  for (const auto& [i, coef] : v.terms) c.add(s.pair_at(i), coef);
  return c;
}

// ------------------------------------------------------------- differential

namespace detail {

DColumns d_columns(const Quiver& q, std::size_t n, std::uint64_t budget) {
  CochainSpace domain(q, n, budget);
  CochainSpace target(q, n + 1, budget);
  const std::size_t target_vb = target.vertex_block();

  DColumns d;
  d.domain_dim = domain.vertex_block();
  d.codomain_dim = target.dim() - target_vb;
  d.cols.resize(d.domain_dim);

  const Rational append_sign = (n % 2 == 0) ? Rational(-1) : Rational(1);  // (-1)^(n+1)
  for (std::size_t j = 0; j < d.domain_dim; ++j) {
    const Path& gamma = domain.pair_at(j).gamma;
    std::map<std::uint32_t, Rational> acc;
    auto put = [&](const Path& word, std::int32_t arrow, const Rational& c) {
      ParallelPair p = ParallelPair::make(q, word, false, arrow);
      std::uint32_t row = static_cast<std::uint32_t>(target.index_of(p) - target_vb);
      auto [it, inserted] = acc.emplace(row, c);
      if (!inserted) it->second += c;
    };
    const std::int32_t v = gamma.source();  // == target, the pair is (gamma, e_v)
    for (std::int32_t a : q.arrows_into(v)) {
      std::vector<std::int32_t> w{a};
      w.insert(w.end(), gamma.arrows().begin(), gamma.arrows().end());
      put(Path::word(q, w), a, Rational(1));
    }
    for (std::int32_t a : q.arrows_out_of(v)) {
      std::vector<std::int32_t> w = gamma.arrows();
      w.push_back(a);
      put(Path::word(q, w), a, append_sign);
    }
    for (const auto& [row, c] : acc)
      if (!c.is_zero()) d.cols[j].terms.emplace_back(row, c);
  }
  return d;
}

}  // namespace detail

namespace {

std::vector<SparseVec> transpose_cols(const std::vector<SparseVec>& cols,
                                      std::size_t row_count) {
  std::vector<SparseVec> rows(row_count);
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (const auto& [i, c] : cols[j].terms)
      rows[i].terms.emplace_back(static_cast<std::uint32_t>(j), c);
  return rows;
}

}  // namespace

Matrix d_map(const Quiver& q, std::size_t n, std::uint64_t budget) {
  detail::DColumns d = detail::d_columns(q, n, budget);
  Matrix m(d.codomain_dim, d.domain_dim);
  for (std::size_t j = 0; j < d.cols.size(); ++j)
    for (const auto& [i, c] : d.cols[j].terms) m.at(i, j) = c;
  return m;
}

Matrix full_differential(const Quiver& q, std::size_t n, std::uint64_t budget) {
  detail::DColumns d = detail::d_columns(q, n, budget);
  CochainSpace domain(q, n, budget);
  CochainSpace target(q, n + 1, budget);
  Matrix m(target.dim(), domain.dim());
  for (std::size_t j = 0; j < d.cols.size(); ++j)
    for (const auto& [i, c] : d.cols[j].terms) m.at(target.vertex_block() + i, j) = c;
  return m;  // arrow-block columns stay zero
}

Cochain apply_differential(const Quiver& q, const Cochain& c) {
  const std::size_t n = c.degree();
  const Rational append_sign = (n % 2 == 0) ? Rational(-1) : Rational(1);
  Cochain out(n + 1);
  for (const auto& [pair, coef] : c.terms()) {
    if (!pair.x_is_vertex) continue;  // the differential kills the arrow block
    const Path& gamma = pair.gamma;
    const std::int32_t v = gamma.source();
    for (std::int32_t a : q.arrows_into(v)) {
      std::vector<std::int32_t> w{a};
      w.insert(w.end(), gamma.arrows().begin(), gamma.arrows().end());
      out.add(ParallelPair::make(q, Path::word(q, w), false, a), coef);
    }
    for (std::int32_t a : q.arrows_out_of(v)) {
      std::vector<std::int32_t> w = gamma.arrows();
      w.push_back(a);
      out.add(ParallelPair::make(q, Path::word(q, w), false, a), coef * append_sign);
    }
  }
  return out;
}

// --------------------------------------------------------------- cohomology

CohomologyGroup cohomology(const Quiver& q, std::size_t n, std::uint64_t budget) {
  CochainSpace space(q, n, budget);
  const std::size_t vb = space.vertex_block();
  const std::size_t dim = space.dim();

  // Kernel: ker(D_n) on the vertex block plus the entire arrow block (the
  // differential vanishes there).
  detail::DColumns dn = detail::d_columns(q, n, budget);
  Subspace ker_d = kernel_of_rows(transpose_cols(dn.cols, dn.codomain_dim), vb);
  std::vector<SparseVec> kernel_rows = ker_d.rows();
  for (std::size_t j = vb; j < dim; ++j)
    kernel_rows.push_back(SparseVec::unit(static_cast<std::uint32_t>(j)));
  Subspace kernel = Subspace::span(std::move(kernel_rows), dim);

  // Image of the previous differential lands in the arrow block.
  Subspace image(dim);
  if (n >= 1) {
    detail::DColumns dprev = detail::d_columns(q, n - 1, budget);
    std::vector<SparseVec> shifted = dprev.cols;
    for (SparseVec& col : shifted)
      for (auto& [row, c] : col.terms) row += static_cast<std::uint32_t>(vb);
    image = Subspace::span(std::move(shifted), dim);
  }

  // Representatives: kernel basis reduced mod image, renormalized.
  std::vector<SparseVec> reduced;
  reduced.reserve(kernel.dim());
  for (const SparseVec& r : kernel.rows()) reduced.push_back(image.reduce(r));
  rref_rows(reduced);

  if (kernel.dim() < image.dim() || reduced.size() != kernel.dim() - image.dim())
    throw std::logic_error("cohomology: rank bookkeeping violated");

  std::vector<Cochain> reps;
  reps.reserve(reduced.size());
  for (const SparseVec& r : reduced) reps.push_back(from_coords(space, r));

  return CohomologyGroup{n,     reduced.size(),   std::move(space),
                         kernel, std::move(image), std::move(reps)};
}

std::vector<std::size_t> hh_dim_table(const Quiver& q, std::size_t n_max,
                                      std::uint64_t budget) {
  // dim HH^n = (vb_n - rank D_n) + (dim C^n - vb_n) - rank D_{n-1};
  // only ranks are needed, so groups are never materialized.
  std::vector<std::size_t> dims;
  std::size_t prev_rank = 0;
  for (std::size_t n = 0; n <= n_max; ++n) {
    CochainSpace space(q, n, budget);
    detail::DColumns dn = detail::d_columns(q, n, budget);
    std::vector<SparseVec> cols = dn.cols;
    const std::size_t rank = rref_rows(cols).size();
    dims.push_back(space.dim() - rank - prev_rank);
    prev_rank = rank;
  }
  return dims;
}

}  // namespace qhh
