#include "qhh/bracket.hpp"

#include "qhh/errors.hpp"

namespace qhh {

namespace {

Rational parity_sign(long long exponent) {
  return (exponent % 2 == 0) ? Rational(1) : Rational(-1);
}

}  // namespace

Cochain circ_i(const Quiver& q, const Cochain& f, const Cochain& g, std::size_t i) {
  const std::size_t n = f.degree(), m = g.degree();
  if (i < 1 || i > n)
    throw DomainError("circ_i: slot " + std::to_string(i) + " outside 1.." +
                      std::to_string(n));
  Cochain out(n + m - 1);
  for (const auto& [fp, fc] : f.terms()) {
    const std::int32_t a_i = fp.gamma.arrow_at(i - 1);
    for (const auto& [gp, gc] : g.terms()) {
      if (gp.x_is_vertex || gp.x != a_i) continue;
      out.add(ParallelPair::make(q, substitute(q, fp.gamma, i, gp.gamma), fp.x_is_vertex,
                                 fp.x),
              fc * gc);
    }
  }
  return out;
}

Cochain circ(const Quiver& q, const Cochain& f, const Cochain& g) {
  const std::size_t n = f.degree(), m = g.degree();
  if (n < 1) throw DomainError("circ: first factor must have degree >= 1");
  Cochain out(n + m - 1);
  for (std::size_t i = 1; i <= n; ++i) {
    Cochain term = circ_i(q, f, g, i);
    term *= parity_sign(static_cast<long long>(i - 1) *
                        (static_cast<long long>(m) - 1));
    out += term;
  }
  return out;
}

Cochain bracket_q(const Quiver& q, const Cochain& f, const Cochain& g) {
  const std::size_t n = f.degree(), m = g.degree();
  if (n < 1 || m < 1) throw DomainError("bracket: degrees must be >= 1");
  Cochain out = circ(q, f, g);
  Cochain rev = circ(q, g, f);
  rev *= parity_sign(static_cast<long long>(n - 1) * static_cast<long long>(m - 1));
  out -= rev;
  return out;
}

Cochain induced_bracket(const Quiver& q, const Cochain& f, const Cochain& g,
                        const CohomologyGroup& target) {
  Cochain b = bracket_q(q, f, g);
  if (b.degree() != target.degree)
    throw DomainError("induced_bracket: target group has degree " +
                      std::to_string(target.degree) + ", bracket has degree " +
                      std::to_string(b.degree()));
  return from_coords(target.space, target.image.reduce(to_coords(target.space, b)));
}

Cochain hh1_action(const Quiver& q, const Cochain& x, const Cochain& c) {
  if (x.degree() != 1) throw DomainError("hh1_action: acting element must have degree 1");
  return bracket_q(q, x, c);
}

Cochain hh1_action(const Quiver& q, const Cochain& x, const Cochain& c,
                   const CohomologyGroup& target) {
  if (x.degree() != 1) throw DomainError("hh1_action: acting element must have degree 1");
  return induced_bracket(q, x, c, target);
}

}  // namespace qhh
