#include "qhh/sl2.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "qhh/errors.hpp"

namespace qhh {

namespace {

void require_two_loops(const Quiver& q) {
  if (q.num_vertices() != 1 || q.num_arrows() != 2)
    throw DomainError("sl2: quiver must have one vertex and exactly two loops");
}

Cochain arrow_pair(const Quiver& q, std::int32_t path_arrow, std::int32_t shortcut,
                   const Rational& coef = Rational(1)) {
  Path p = Path::word(q, {path_arrow});
  return Cochain::of(1, ParallelPair::make(q, p, false, shortcut), coef);
}

std::size_t h_of(std::size_t n) { return (n + 1) / 2; }

long long binom(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

Cochain sl2_E(const Quiver& q) {
  require_two_loops(q);
  return arrow_pair(q, 0, 1);
}

Cochain sl2_F(const Quiver& q) {
  require_two_loops(q);
  return arrow_pair(q, 1, 0);
}

Cochain sl2_H(const Quiver& q) {
  require_two_loops(q);
  return arrow_pair(q, 1, 1) - arrow_pair(q, 0, 0);
}

Cochain gl2_I(const Quiver& q) {
  require_two_loops(q);
  return arrow_pair(q, 0, 0) + arrow_pair(q, 1, 1);
}

int weight(const Quiver& q, const Path& gamma) {
  require_two_loops(q);
  int w = 0;
  for (std::int32_t a : gamma.arrows()) {
    if (a == 0) {
      ++w;
    } else if (a == 1) {
      --w;
    } else {
      throw DomainError("weight: path uses an arrow outside the two loops");
    }
  }
  return w;
}

std::map<int, std::size_t> weight_profile(const Quiver& q, ProfileKind kind, std::size_t n,
                                          std::uint64_t budget) {
  require_two_loops(q);

  if (kind == ProfileKind::total) {
    std::map<int, std::size_t> profile;
    for (const Path& p : enumerate_paths(q, n, budget)) {
      int v = weight(q, p);
      ++profile[v - 1];
      ++profile[v + 1];
    }
    return profile;
  }

  if (kind == ProfileKind::image) {
    std::map<int, std::size_t> profile;
    if (n == 0) return profile;
    // Columns of D_{n-1} are weight-homogeneous: D(gamma,e) has weight
    // v(gamma).  Distinct weights touch disjoint rows, so the image
    // profile is the per-weight column rank.
    detail::DColumns d = detail::d_columns(q, n - 1, budget);
    CochainSpace domain(q, n - 1, budget);
    std::map<int, std::vector<SparseVec>> blocks;
    for (std::size_t j = 0; j < d.cols.size(); ++j)
      if (!d.cols[j].empty())
        blocks[weight(q, domain.pair_at(j).gamma)].push_back(d.cols[j]);
    for (auto& [w, cols] : blocks) {
      std::size_t rank = rref_rows(cols).size();
      if (rank > 0) profile[w] += rank;
    }
    return profile;
  }

  std::map<int, std::size_t> profile = weight_profile(q, ProfileKind::total, n, budget);
  for (const auto& [w, dim] : weight_profile(q, ProfileKind::image, n, budget)) {
    auto it = profile.find(w);
    if (it == profile.end() || it->second < dim)
      throw std::logic_error("weight_profile: image exceeds total in weight " +
                             std::to_string(w));
    it->second -= dim;
    if (it->second == 0) profile.erase(it);
  }
  return profile;
}

std::vector<long long> multiplicities(const Quiver& q, std::size_t n, std::uint64_t budget) {
  require_two_loops(q);
  if (n < 1) throw DomainError("multiplicities: degree must be >= 1");
  std::map<int, std::size_t> w = weight_profile(q, ProfileKind::cohomology, n, budget);
  auto dim_at = [&w](int t) -> long long {
    auto it = w.find(t);
    return it == w.end() ? 0 : static_cast<long long>(it->second);
  };
  std::vector<long long> out;
  for (std::size_t l = 0; l <= h_of(n); ++l) {
    int t = static_cast<int>(n) + 1 - 2 * static_cast<int>(l);
    long long count = dim_at(t) - dim_at(t + 2);
    if (count < 0) throw std::logic_error("multiplicities: negative count");
    out.push_back(count);
  }
  return out;
}

long long closed_form_q(std::size_t n, std::size_t l) {
  if (n < 1) throw DomainError("closed_form_q: degree must be >= 1");
  if (l > h_of(n)) throw DomainError("closed_form_q: l outside 0..floor((n+1)/2)");
  long long ln = static_cast<long long>(n), ll = static_cast<long long>(l);
  long long cohom = binom(ln + 1, ll) - binom(ln + 1, ll - 1);
  long long image = (n >= 2) ? binom(ln - 1, ll - 1) - binom(ln - 1, ll - 2) : 0;
  return cohom - image;
}

// --------------------------------------------------------------------- table

long long MultiplicityTable::count(std::size_t n, long long t) const {
  if (n < n_min || n > n_max()) return 0;
  long long tl = static_cast<long long>(n) + 1 - t;
  if (t < 0 || tl < 0 || tl % 2 != 0) return 0;
  std::size_t l = static_cast<std::size_t>(tl / 2);
  const auto& row = rows[n - n_min];
  return l < row.size() ? row[l] : 0;
}

MultiplicityTable decompose_table(const Quiver& q, std::size_t n_lo, std::size_t n_hi,
                                  std::uint64_t budget) {
  if (n_lo < 1 || n_lo > n_hi)
    throw DomainError("decompose: degree range must satisfy 1 <= lo <= hi");
  MultiplicityTable t;
  t.n_min = n_lo;
  for (std::size_t n = n_lo; n <= n_hi; ++n) t.rows.push_back(multiplicities(q, n, budget));
  return t;
}

MultiplicityTable pascal_table(std::size_t n_max) {
  if (n_max < 2) throw DomainError("pascal_table: n_max must be >= 2");
  // Weight profile of HH^2; rows propagate without touching the quiver.
  std::map<int, long long> cur{{-3, 1}, {-1, 2}, {1, 2}, {3, 1}};
  MultiplicityTable t;
  t.n_min = 2;
  for (std::size_t n = 2; n <= n_max; ++n) {
    if (n > 2) {
      std::map<int, long long> next;
      for (const auto& [w, d] : cur) {
        next[w - 1] += d;
        next[w + 1] += d;
      }
      cur = std::move(next);
    }
    std::vector<long long> row;
    for (std::size_t l = 0; l <= h_of(n); ++l) {
      int tt = static_cast<int>(n) + 1 - 2 * static_cast<int>(l);
      auto at = [&cur](int w) {
        auto it = cur.find(w);
        return it == cur.end() ? 0LL : it->second;
      };
      row.push_back(at(tt) - at(tt + 2));
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

bool column_property_check(const Quiver& q, std::size_t n_max, std::uint64_t budget) {
  require_two_loops(q);
  if (n_max < 3) return true;
  MultiplicityTable t = decompose_table(q, 2, n_max, budget);
  for (std::size_t n = 2; n + 1 <= n_max; ++n)
    if (t.count(n, 1) != t.count(n + 1, 0)) return false;
  return true;
}

// ----------------------------------------------------------------- emitters

std::string emit_table_text(const MultiplicityTable& t) {
  const long long t_max = static_cast<long long>(t.n_max()) + 1;
  std::vector<std::string> headers{"n"};
  for (long long w = 0; w <= t_max; ++w) headers.push_back("V(" + std::to_string(w) + ")");

  std::vector<std::vector<std::string>> grid;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    std::size_t n = t.row_degree(i);
    std::vector<std::string> line{"HH^" + std::to_string(n)};
    for (long long w = 0; w <= t_max; ++w) {
      long long c = t.count(n, w);
      line.push_back(c == 0 ? "" : std::to_string(c));
    }
    grid.push_back(std::move(line));
  }

  std::vector<std::size_t> width(headers.size());
  for (std::size_t c = 0; c < headers.size(); ++c) {
    width[c] = headers[c].size();
    for (const auto& line : grid) width[c] = std::max(width[c], line[c].size());
  }
  std::ostringstream os;
  auto put_row = [&os, &width](const std::vector<std::string>& line) {
    for (std::size_t c = 0; c < line.size(); ++c) {
      if (c > 0) os << "  ";
      os << std::string(width[c] - line[c].size(), ' ') << line[c];
    }
    os << '\n';
  };
  put_row(headers);
  for (const auto& line : grid) put_row(line);
  return os.str();
}

std::string emit_table_csv(const MultiplicityTable& t) {
  std::ostringstream os;
  os << "n,t,multiplicity\n";
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    std::size_t n = t.row_degree(i);
    for (std::size_t l = t.rows[i].size(); l-- > 0;) {
      int tt = static_cast<int>(n) + 1 - 2 * static_cast<int>(l);
      os << n << ',' << tt << ',' << t.rows[i][l] << '\n';
    }
  }
  return os.str();
}

std::string emit_table_json(const MultiplicityTable& t) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    std::size_t n = t.row_degree(i);
    nlohmann::json comps = nlohmann::json::array();
    for (std::size_t l = t.rows[i].size(); l-- > 0;) {
      int tt = static_cast<int>(n) + 1 - 2 * static_cast<int>(l);
      comps.push_back({{"t", tt}, {"count", t.rows[i][l]}});
    }
    rows.push_back({{"n", n}, {"components", comps}});
  }
  nlohmann::json j{{"n_min", t.n_min}, {"n_max", t.n_max()}, {"rows", rows}};
  return j.dump();
}

namespace {

MultiplicityTable table_from_entries(std::map<std::size_t, std::map<int, long long>> byn) {
  if (byn.empty()) throw ParseError("table: no rows");
  std::size_t n_min = byn.begin()->first, n_max = byn.rbegin()->first;
  if (n_min < 1) throw ParseError("table: degrees must be >= 1");
  MultiplicityTable t;
  t.n_min = n_min;
  for (std::size_t n = n_min; n <= n_max; ++n) {
    auto it = byn.find(n);
    if (it == byn.end())
      throw ParseError("table: missing row for degree " + std::to_string(n));
    std::vector<long long> row(h_of(n) + 1, 0);
    for (const auto& [tt, count] : it->second) {
      long long tl = static_cast<long long>(n) + 1 - tt;
      if (tt < 0 || tl < 0 || tl % 2 != 0)
        throw ParseError("table: V(" + std::to_string(tt) + ") cannot occur in HH^" +
                         std::to_string(n));
      if (count < 0) throw ParseError("table: negative multiplicity");
      row.at(static_cast<std::size_t>(tl / 2)) = count;
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

}  // namespace

MultiplicityTable parse_table_csv(const std::string& s) {
  std::istringstream is(s);
  std::string line;
  if (!std::getline(is, line) || line != "n,t,multiplicity")
    throw ParseError("table csv: missing 'n,t,multiplicity' header");
  std::map<std::size_t, std::map<int, long long>> byn;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string a, b, c;
    if (!std::getline(ls, a, ',') || !std::getline(ls, b, ',') || !std::getline(ls, c))
      throw ParseError("table csv: malformed line '" + line + "'");
    try {
      std::size_t n = std::stoul(a);
      int tt = std::stoi(b);
      long long count = std::stoll(c);
      if (!byn[n].emplace(tt, count).second)
        throw ParseError("table csv: duplicate entry for (" + a + "," + b + ")");
      (void)count;
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception&) {
      throw ParseError("table csv: malformed line '" + line + "'");
    }
  }
  return table_from_entries(std::move(byn));
}

MultiplicityTable parse_table_json(const std::string& s) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(s);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("table json: invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n_min") || !j.contains("n_max") || !j.contains("rows") ||
      j.size() != 3)
    throw ParseError("table json: expected exactly {n_min, n_max, rows}");
  if (!j["rows"].is_array()) throw ParseError("table json: rows must be an array");
  std::map<std::size_t, std::map<int, long long>> byn;
  for (const auto& row : j["rows"]) {
    if (!row.is_object() || !row.contains("n") || !row.contains("components") ||
        row.size() != 2)
      throw ParseError("table json: each row needs exactly {n, components}");
    std::size_t n = row["n"].get<std::size_t>();
    if (byn.contains(n))
      throw ParseError("table json: duplicate row for degree " + std::to_string(n));
    auto& dst = byn[n];
    for (const auto& comp : row["components"]) {
      if (!comp.is_object() || !comp.contains("t") || !comp.contains("count") ||
          comp.size() != 2)
        throw ParseError("table json: each component needs exactly {t, count}");
      if (!dst.emplace(comp["t"].get<int>(), comp["count"].get<long long>()).second)
        throw ParseError("table json: duplicate component");
    }
  }
  MultiplicityTable t = table_from_entries(std::move(byn));
  if (t.n_min != j["n_min"].get<std::size_t>() || t.n_max() != j["n_max"].get<std::size_t>())
    throw ParseError("table json: declared degree range disagrees with rows");
  return t;
}

}  // namespace qhh
