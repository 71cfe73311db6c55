#pragma once

#include "qhh/cochain.hpp"

namespace qhh {

/// Composition at one slot (i is 1-based, 1 <= i <= deg f):
///   (alpha, x) o_i (beta, y) = [a_i == y] * (alpha with a_i replaced by beta, x)
/// extended bilinearly.  Terms of g whose second member is a vertex never
/// match an arrow a_i and contribute nothing.
Cochain circ_i(const Quiver& q, const Cochain& f, const Cochain& g, std::size_t i);

/// Circle product f o g = sum_i (-1)^((i-1)(m-1)) f o_i g, m = deg g.
/// Requires deg f >= 1.
Cochain circ(const Quiver& q, const Cochain& f, const Cochain& g);

/// Gerstenhaber bracket [f,g] = f o g - (-1)^((n-1)(m-1)) g o f on the
/// combinatorial complex; degrees must both be >= 1.
Cochain bracket_q(const Quiver& q, const Cochain& f, const Cochain& g);

/// Bracket of cohomology classes: the chain-level bracket of two cocycle
/// representatives, reduced to the canonical representative modulo the
/// coboundaries of the target group (degree deg f + deg g - 1).
Cochain induced_bracket(const Quiver& q, const Cochain& f, const Cochain& g,
                        const CohomologyGroup& target);

/// The degree-1 Lie action x.c = [x, c]; x must have degree 1.  Concretely
///   (a, x).(alpha, y) = [a == y] (alpha, x) - sum_i [a_i == x] (alpha o_i a, y).
Cochain hh1_action(const Quiver& q, const Cochain& x, const Cochain& c);
/// Same action on classes (reduces into the target group).
Cochain hh1_action(const Quiver& q, const Cochain& x, const Cochain& c,
                   const CohomologyGroup& target);

}  // namespace qhh
