#include "qhh/formal_sum.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

#include "qhh/errors.hpp"

namespace qhh {

std::string format_cochain(const Quiver& q, const Cochain& c) {
  if (c.is_zero()) return "0";
  std::string out;
  for (const auto& [pair, coef] : c.terms()) {
    const bool neg = coef.sign() < 0;
    Rational mag = neg ? -coef : coef;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (!(mag == Rational(1))) out += mag.str() + "*";
    out += pair.str(q);
  }
  return out;
}

namespace {

// Splits a concatenation of arrow ids into a composable word.  Tries the
// longest matching arrow id first and backtracks, constraining each arrow
// to start where the previous one ended.
bool split_word(const Quiver& q, const std::string& s, std::size_t pos,
                std::int32_t at_vertex, std::vector<std::int32_t>& acc) {
  if (pos == s.size()) return !acc.empty();
  std::vector<std::size_t> candidates;
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    const Arrow& ar = q.arrow(a);
    if (at_vertex >= 0 && ar.src != at_vertex) continue;
    if (s.compare(pos, ar.id.size(), ar.id) == 0) candidates.push_back(a);
  }
  std::sort(candidates.begin(), candidates.end(), [&q](std::size_t x, std::size_t y) {
    return q.arrow(x).id.size() > q.arrow(y).id.size();
  });
  for (std::size_t a : candidates) {
    acc.push_back(static_cast<std::int32_t>(a));
    if (split_word(q, s, pos + q.arrow(a).id.size(), q.arrow(a).tgt, acc)) return true;
    acc.pop_back();
  }
  return false;
}

Path parse_path(const Quiver& q, const std::string& token) {
  if (token.empty()) throw ParseError("element: empty path");
  if (token[0] == '@') {
    auto v = q.vertex_index(token.substr(1));
    if (!v) throw ParseError("element: unknown vertex '" + token.substr(1) + "'");
    return Path::trivial(static_cast<std::int32_t>(*v));
  }
  std::vector<std::int32_t> arrows;
  if (!split_word(q, token, 0, -1, arrows))
    throw ParseError("element: '" + token + "' is not a composable arrow word");
  return Path::word(q, std::move(arrows));
}

ParallelPair parse_pair(const Quiver& q, const std::string& body) {
  std::size_t comma = body.rfind(',');
  if (comma == std::string::npos) throw ParseError("element: pair needs 'path,shortcut'");
  Path gamma = parse_path(q, body.substr(0, comma));
  std::string xs = body.substr(comma + 1);
  if (xs.empty()) throw ParseError("element: empty shortcut");
  bool is_vertex = false;
  std::int32_t x = 0;
  if (xs[0] == '@') {
    auto v = q.vertex_index(xs.substr(1));
    if (!v) throw ParseError("element: unknown vertex '" + xs.substr(1) + "'");
    is_vertex = true;
    x = static_cast<std::int32_t>(*v);
  } else if (auto a = q.arrow_index(xs)) {
    x = static_cast<std::int32_t>(*a);
  } else if (auto v = q.vertex_index(xs)) {
    is_vertex = true;
    x = static_cast<std::int32_t>(*v);
  } else {
    throw ParseError("element: unknown shortcut '" + xs + "'");
  }
  return ParallelPair::make(q, std::move(gamma), is_vertex, x);
}

}  // namespace

Cochain parse_cochain(const Quiver& q, const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw ParseError("element: empty input");
  if (s == "0") return Cochain(0);

  std::optional<std::size_t> degree;
  std::optional<Cochain> acc;
  std::size_t pos = 0;
  bool first = true;
  while (pos < s.size()) {
    Rational sign(1);
    if (s[pos] == '+' || s[pos] == '-') {
      if (s[pos] == '-') sign = Rational(-1);
      ++pos;
    } else if (!first) {
      throw ParseError("element: expected '+' or '-' before term at '" + s.substr(pos) + "'");
    }
    first = false;
    Rational coef(1);
    if (pos < s.size() && s[pos] != '(') {
      std::size_t star = s.find('*', pos);
      if (star == std::string::npos || star + 1 >= s.size() || s[star + 1] != '(')
        throw ParseError("element: expected 'coef*(path,shortcut)' at '" + s.substr(pos) + "'");
      coef = Rational::from_string(s.substr(pos, star - pos));
      pos = star + 1;
    }
    if (pos >= s.size() || s[pos] != '(')
      throw ParseError("element: expected '(' at '" + s.substr(pos) + "'");
    std::size_t close = s.find(')', pos);
    if (close == std::string::npos) throw ParseError("element: missing ')'");
    ParallelPair pair = parse_pair(q, s.substr(pos + 1, close - pos - 1));
    pos = close + 1;

    std::size_t d = pair.gamma.length();
    if (degree && *degree != d)
      throw ParseError("element: mixed degrees " + std::to_string(*degree) + " and " +
                       std::to_string(d));
    degree = d;
    if (!acc) acc.emplace(d);
    acc->add(pair, sign * coef);
  }
  return *acc;
}

}  // namespace qhh
