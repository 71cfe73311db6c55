#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qhh/bar.hpp"

namespace qhh {

struct CheckResult {
  std::string name;
  bool ok = false;
  std::string detail;
};

bool all_ok(const std::vector<CheckResult>& checks);

/// Seeded randomized identity suite on one quiver, all checks exact:
/// d . d = 0, graded antisymmetry, the graded Jacobi identity, the
/// Leibniz rule delta[f,g] = [f,delta g] + (-1)^(m-1)[delta f,g], and
/// independence of the induced bracket from the representatives.  Each
/// check draws `cases` random instances.
std::vector<CheckResult> run_property_suite(const Quiver& q, std::uint64_t seed,
                                            std::size_t cases,
                                            std::uint64_t budget = kDefaultBasisBudget);

/// Bar-complex referee suite; degrees capped at n_cap and by what the
/// tabulated-map budget admits for this algebra.
std::vector<CheckResult> run_oracle_suite(const Quiver& q, std::uint64_t seed,
                                          std::size_t n_cap = 4,
                                          std::uint64_t basis_budget = kDefaultBasisBudget);

}  // namespace qhh
