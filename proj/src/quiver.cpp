#include "qhh/quiver.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>

#include "qhh/errors.hpp"

namespace qhh {

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
  std::set<std::string> vseen, aseen;
  for (const std::string& v : vertices_)
    if (!vseen.insert(v).second) throw ParseError("quiver: duplicate vertex id '" + v + "'");
  into_.resize(vertices_.size());
  out_.resize(vertices_.size());
  for (std::size_t i = 0; i < arrows_.size(); ++i) {
    const Arrow& a = arrows_[i];
    if (!aseen.insert(a.id).second)
      throw ParseError("quiver: duplicate arrow id '" + a.id + "'");
    if (a.src < 0 || static_cast<std::size_t>(a.src) >= vertices_.size() || a.tgt < 0 ||
        static_cast<std::size_t>(a.tgt) >= vertices_.size())
      throw ParseError("quiver: arrow '" + a.id + "' has an undeclared endpoint");
    out_[a.src].push_back(static_cast<std::int32_t>(i));
    into_[a.tgt].push_back(static_cast<std::int32_t>(i));
  }
}

Quiver Quiver::loops(std::size_t count) {
  std::vector<Arrow> arrows;
  for (std::size_t i = 0; i < count; ++i)
    arrows.push_back({std::string(1, static_cast<char>('a' + i)), 0, 0});
  return Quiver({"e"}, std::move(arrows));
}

std::optional<std::size_t> Quiver::vertex_index(const std::string& id) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i] == id) return i;
  return std::nullopt;
}

std::optional<std::size_t> Quiver::arrow_index(const std::string& id) const {
  for (std::size_t i = 0; i < arrows_.size(); ++i)
    if (arrows_[i].id == id) return i;
  return std::nullopt;
}

Quiver parse_quiver(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("quiver: invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("quiver: top level must be an object");
  for (const auto& [key, _] : j.items())
    if (key != "vertices" && key != "arrows")
      throw ParseError("quiver: unknown field '" + key + "'");
  if (!j.contains("vertices") || !j.contains("arrows"))
    throw ParseError("quiver: missing 'vertices' or 'arrows'");
  if (!j["vertices"].is_array() || !j["arrows"].is_array())
    throw ParseError("quiver: 'vertices' and 'arrows' must be arrays");

  std::vector<std::string> vertices;
  for (const auto& v : j["vertices"]) {
    if (!v.is_string()) throw ParseError("quiver: vertex ids must be strings");
    vertices.push_back(v.get<std::string>());
    if (vertices.back().empty()) throw ParseError("quiver: empty vertex id");
  }

  auto vindex = [&vertices](const std::string& id) -> std::int32_t {
    auto it = std::find(vertices.begin(), vertices.end(), id);
    if (it == vertices.end())
      throw ParseError("quiver: arrow endpoint '" + id + "' is not a declared vertex");
    return static_cast<std::int32_t>(it - vertices.begin());
  };

  std::vector<Arrow> arrows;
  for (const auto& a : j["arrows"]) {
    if (!a.is_object()) throw ParseError("quiver: arrows must be objects");
    for (const auto& [key, _] : a.items())
      if (key != "id" && key != "src" && key != "tgt")
        throw ParseError("quiver: unknown arrow field '" + key + "'");
    if (!a.contains("id") || !a.contains("src") || !a.contains("tgt"))
      throw ParseError("quiver: arrow needs id, src and tgt");
    if (!a["id"].is_string() || !a["src"].is_string() || !a["tgt"].is_string())
      throw ParseError("quiver: arrow fields must be strings");
    std::string id = a["id"].get<std::string>();
    if (id.empty()) throw ParseError("quiver: empty arrow id");
    arrows.push_back({id, vindex(a["src"].get<std::string>()), vindex(a["tgt"].get<std::string>())});
  }
  return Quiver(std::move(vertices), std::move(arrows));
}

// --------------------------------------------------------------------- Path

Path Path::trivial(std::int32_t vertex) {
  Path p;
  p.src_ = p.tgt_ = vertex;
  return p;
}

Path Path::word(const Quiver& q, std::vector<std::int32_t> arrows) {
  if (arrows.empty()) throw DomainError("path: empty word (use Path::trivial)");
  Path p;
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    if (arrows[i] < 0 || static_cast<std::size_t>(arrows[i]) >= q.num_arrows())
      throw DomainError("path: arrow index out of range");
    if (i > 0 && q.arrow(arrows[i - 1]).tgt != q.arrow(arrows[i]).src)
      throw DomainError("path: word is not composable at position " + std::to_string(i + 1));
  }
  p.src_ = q.arrow(arrows.front()).src;
  p.tgt_ = q.arrow(arrows.back()).tgt;
  p.arrows_ = std::move(arrows);
  return p;
}

std::string Path::str(const Quiver& q) const {
  if (is_trivial()) return "@" + q.vertex_id(src_);
  std::string s;
  for (std::int32_t a : arrows_) s += q.arrow(a).id;
  return s;
}

ParallelPair ParallelPair::make(const Quiver& q, Path gamma, bool x_is_vertex, std::int32_t x) {
  std::int32_t xs, xt;
  if (x_is_vertex) {
    if (x < 0 || static_cast<std::size_t>(x) >= q.num_vertices())
      throw DomainError("pair: vertex index out of range");
    xs = xt = x;
  } else {
    if (x < 0 || static_cast<std::size_t>(x) >= q.num_arrows())
      throw DomainError("pair: arrow index out of range");
    xs = q.arrow(x).src;
    xt = q.arrow(x).tgt;
  }
  if (xs != gamma.source() || xt != gamma.target())
    throw DomainError("pair: members are not parallel");
  ParallelPair p;
  p.gamma = std::move(gamma);
  p.x_is_vertex = x_is_vertex;
  p.x = x;
  return p;
}

std::string ParallelPair::str(const Quiver& q) const {
  std::string xs = x_is_vertex ? "@" + q.vertex_id(x) : q.arrow(x).id;
  return "(" + gamma.str(q) + "," + xs + ")";
}

// -------------------------------------------------------------- enumeration

namespace {

void check_budget(const Quiver& q, std::size_t n, std::uint64_t budget) {
  // Refusal criterion is |Q1|^n, evaluated without overflow.
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (q.num_arrows() != 0 && count > budget / q.num_arrows()) {
      throw BudgetError("paths: |Q1|^" + std::to_string(n) + " exceeds budget " +
                        std::to_string(budget));
    }
    count *= q.num_arrows();
  }
  if (count > budget)
    throw BudgetError("paths: |Q1|^" + std::to_string(n) + " exceeds budget " +
                      std::to_string(budget));
}

}  // namespace

std::vector<Path> enumerate_paths(const Quiver& q, std::size_t n, std::uint64_t budget) {
  check_budget(q, n, budget);
  std::vector<Path> out;
  if (n == 0) {
    for (std::size_t v = 0; v < q.num_vertices(); ++v)
      out.push_back(Path::trivial(static_cast<std::int32_t>(v)));
    return out;
  }
  // Depth-first over arrow words; trying arrows in index order at every
  // level yields lexicographic word order.
  std::vector<std::int32_t> word;
  auto extend = [&](auto&& self, std::int32_t at) -> void {
    if (word.size() == n) {
      out.push_back(Path::word(q, word));
      return;
    }
    for (std::int32_t a : q.arrows_out_of(at)) {
      word.push_back(a);
      self(self, q.arrow(a).tgt);
      word.pop_back();
    }
  };
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    word.push_back(static_cast<std::int32_t>(a));
    extend(extend, q.arrow(a).tgt);
    word.pop_back();
  }
  return out;
}

std::vector<ParallelPair> parallel_pairs(const Quiver& q, std::size_t n, PairKind kind,
                                         std::uint64_t budget) {
  std::vector<ParallelPair> out;
  for (const Path& p : enumerate_paths(q, n, budget)) {
    if (kind == PairKind::vertex) {
      if (p.source() == p.target())
        out.push_back(ParallelPair::make(q, p, true, p.source()));
    } else {
      for (std::size_t a = 0; a < q.num_arrows(); ++a)
        if (q.arrow(a).src == p.source() && q.arrow(a).tgt == p.target())
          out.push_back(ParallelPair::make(q, p, false, static_cast<std::int32_t>(a)));
    }
  }
  return out;
}

Path substitute(const Quiver& q, const Path& alpha, std::size_t i, const Path& beta) {
  if (i < 1 || i > alpha.length())
    throw DomainError("substitute: position " + std::to_string(i) + " out of range");
  const Arrow& at = q.arrow(alpha.arrow_at(i - 1));
  if (beta.source() != at.src || beta.target() != at.tgt)
    throw DomainError("substitute: replacement path is not parallel to arrow '" + at.id + "'");
  std::vector<std::int32_t> word;
  word.reserve(alpha.length() + beta.length() - 1);
  const auto& aw = alpha.arrows();
  word.insert(word.end(), aw.begin(), aw.begin() + (i - 1));
  word.insert(word.end(), beta.arrows().begin(), beta.arrows().end());
  word.insert(word.end(), aw.begin() + i, aw.end());
  if (word.empty()) return Path::trivial(alpha.source());  // loop replaced by a trivial path
  return Path::word(q, word);
}

}  // namespace qhh
