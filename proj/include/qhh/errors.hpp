#pragma once

#include <stdexcept>
#include <string>

namespace qhh {

/// Base class for all errors raised by the library.
///
/// The CLI maps subclasses onto exit codes: ParseError and DomainError are
/// input errors (2), BudgetError is a refused computation (3).
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed external input: quiver JSON, formal sums, table emissions.
class ParseError : public Error {
public:
  explicit ParseError(const std::string& msg) : Error(msg) {}
};

/// Structurally valid input outside an operation's domain
/// (non-composable paths, degree mismatches, out-of-range indices, ...).
class DomainError : public Error {
public:
  explicit DomainError(const std::string& msg) : Error(msg) {}
};

/// Computation refused because it would exceed a size budget.
class BudgetError : public Error {
public:
  explicit BudgetError(const std::string& msg) : Error(msg) {}
};

}  // namespace qhh
