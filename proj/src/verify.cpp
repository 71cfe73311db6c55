#include "qhh/verify.hpp"

#include <algorithm>
#include <array>

#include "qhh/bracket.hpp"

namespace qhh {

bool all_ok(const std::vector<CheckResult>& checks) {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.ok; });
}

namespace {

Rational parity_sign(std::size_t e) { return e % 2 == 0 ? Rational(1) : Rational(-1); }

Cochain random_cochain(const CochainSpace& space, Rng& rng, int terms) {
  Cochain c(space.degree());
  if (space.dim() == 0) return c;
  for (int t = 0; t < terms; ++t)
    c.add(space.pair_at(rng.below(space.dim())),
          Rational(rng.range(-3, 3), rng.range(1, 2)));
  return c;
}

}  // namespace

std::vector<CheckResult> run_property_suite(const Quiver& q, std::uint64_t seed,
                                            std::size_t cases, std::uint64_t budget) {
  std::vector<CheckResult> out;
  auto line = [&out, &cases](const std::string& name, bool ok) {
    out.push_back({name, ok, std::to_string(cases) + " cases"});
  };
  // Cochain spaces for the degrees the identities draw from.
  std::vector<CochainSpace> spaces;
  for (std::size_t n = 0; n <= 4; ++n) spaces.emplace_back(q, n, budget);

  {
    Rng rng(seed ^ 0x5eedd1f5u);
    bool ok = true;
    for (std::size_t it = 0; it < cases && ok; ++it) {
      std::size_t n = rng.below(4);
      Cochain c = random_cochain(spaces[n], rng, 4);
      ok = apply_differential(q, apply_differential(q, c)).is_zero();
    }
    line("differential squares to zero", ok);
  }

  {
    Rng rng(seed ^ 0xa5715eedu);
    bool ok = true;
    for (std::size_t it = 0; it < cases && ok; ++it) {
      std::size_t n = 1 + rng.below(3), m = 1 + rng.below(3);
      Cochain f = random_cochain(spaces[n], rng, 3);
      Cochain g = random_cochain(spaces[m], rng, 3);
      Cochain lhs = bracket_q(q, f, g);
      Cochain rhs = bracket_q(q, g, f);
      ok = (lhs + parity_sign((n - 1) * (m - 1)) * rhs).is_zero();
    }
    line("graded antisymmetry", ok);
  }

  {
    Rng rng(seed ^ 0x1ac0b100u);
    bool ok = true;
    for (std::size_t it = 0; it < cases && ok; ++it) {
      std::size_t n = 1 + rng.below(2), m = 1 + rng.below(2), p = 1 + rng.below(2);
      Cochain f = random_cochain(spaces[n], rng, 3);
      Cochain g = random_cochain(spaces[m], rng, 3);
      Cochain h = random_cochain(spaces[p], rng, 3);
      Cochain sum =
          parity_sign((n - 1) * (p - 1)) * bracket_q(q, bracket_q(q, f, g), h) +
          parity_sign((m - 1) * (n - 1)) * bracket_q(q, bracket_q(q, g, h), f) +
          parity_sign((p - 1) * (m - 1)) * bracket_q(q, bracket_q(q, h, f), g);
      ok = sum.is_zero();
    }
    line("graded Jacobi identity", ok);
  }

  {
    Rng rng(seed ^ 0x1e1b2125u);
    bool ok = true;
    for (std::size_t it = 0; it < cases && ok; ++it) {
      std::size_t n = 1 + rng.below(3), m = 1 + rng.below(3);
      Cochain f = random_cochain(spaces[n], rng, 3);
      Cochain g = random_cochain(spaces[m], rng, 3);
      Cochain lhs = apply_differential(q, bracket_q(q, f, g));
      Cochain rhs = bracket_q(q, f, apply_differential(q, g)) +
                    parity_sign(m - 1) * bracket_q(q, apply_differential(q, f), g);
      ok = (lhs == rhs);
    }
    line("Leibniz rule for the differential", ok);
  }

  {
    // The induced bracket on cohomology ignores coboundary shifts.
    Rng rng(seed ^ 0x0e9e5e47u);
    bool ok = true;
    std::array<CohomologyGroup, 3> groups = {cohomology(q, 1, budget),
                                             cohomology(q, 2, budget),
                                             cohomology(q, 3, budget)};
    for (std::size_t it = 0; it < cases && ok; ++it) {
      std::size_t n = 1 + rng.below(2), m = 1 + rng.below(2);
      const CohomologyGroup& gn = groups[n - 1];
      const CohomologyGroup& gm = groups[m - 1];
      const CohomologyGroup& target = groups[n + m - 2];
      Cochain f(n), g(m);
      for (const Cochain& rep : gn.representatives)
        f += Rational(rng.range(-2, 2)) * rep;
      for (const Cochain& rep : gm.representatives)
        g += Rational(rng.range(-2, 2)) * rep;
      Cochain f2 = f + apply_differential(q, random_cochain(spaces[n - 1], rng, 3));
      Cochain g2 = g + apply_differential(q, random_cochain(spaces[m - 1], rng, 3));
      ok = induced_bracket(q, f, g, target) == induced_bracket(q, f2, g2, target);
    }
    line("representative independence of the induced bracket", ok);
  }

  return out;
}

std::vector<CheckResult> run_oracle_suite(const Quiver& q, std::uint64_t seed,
                                          std::size_t n_cap, std::uint64_t basis_budget) {
  const std::size_t d = q.num_vertices() + q.num_arrows();
  // Largest degree whose delta output stays inside the tabulation budget.
  std::size_t n_max = 0;
  std::uint64_t scalars = d * d;  // arity-1 table
  while (n_max < n_cap && scalars <= kDefaultBarBudget / d) {
    scalars *= d;
    if (scalars > kDefaultBarBudget) break;
    ++n_max;
  }
  OracleReport report = oracle_crosscheck(q, n_max, seed, kDefaultBarBudget, basis_budget);
  std::vector<CheckResult> out;
  for (const auto& l : report.lines) out.push_back({l.name, l.ok, l.detail});
  return out;
}

}  // namespace qhh
