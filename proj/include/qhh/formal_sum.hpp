#pragma once

#include <string>

#include "qhh/cochain.hpp"

namespace qhh {

/// Renders c as `coef*(path,shortcut)` terms joined by ` + ` / ` - `.
/// Unit coefficients drop the `coef*`; vertex shortcuts and trivial paths
/// print as `@` + vertex id; the zero element prints as `0`.
std::string format_cochain(const Quiver& q, const Cochain& c);

/// Inverse of format_cochain, whitespace-insensitive.  Also accepts a bare
/// vertex id as a shortcut when it does not collide with an arrow id.
/// All nonzero terms must share one degree; the literal `0` parses to the
/// zero element (reported degree 0).  Throws ParseError on malformed input.
Cochain parse_cochain(const Quiver& q, const std::string& text);

}  // namespace qhh
