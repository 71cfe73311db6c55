#include "qhh/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "qhh/bracket.hpp"
#include "qhh/errors.hpp"
#include "qhh/formal_sum.hpp"
#include "qhh/sl2.hpp"
#include "qhh/verify.hpp"

namespace qhh {

namespace {

std::uint64_t parse_budget_text(const std::string& s, const std::string& what) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) {
        return std::isdigit(c);
      }))
    throw ParseError(what + ": expected a positive integer, got '" + s + "'");
  std::uint64_t v = 0;
  try {
    v = std::stoull(s);
  } catch (const std::exception&) {
    throw ParseError(what + ": value '" + s + "' out of range");
  }
  if (v == 0) throw ParseError(what + ": budget must be positive");
  return v;
}

std::uint64_t default_budget() {
  if (const char* env = std::getenv("QHH_BUDGET"))
    return parse_budget_text(env, "QHH_BUDGET");
  return kDefaultBasisBudget;
}

Quiver load_quiver(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read quiver file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_quiver(buf.str());
}

std::pair<std::size_t, std::size_t> parse_degree_range(const std::string& s) {
  auto number = [&s](const std::string& tok) -> std::size_t {
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](unsigned char c) {
          return std::isdigit(c);
        }))
      throw ParseError("degrees: expected 'a..b' or 'n', got '" + s + "'");
    return static_cast<std::size_t>(std::stoull(tok));
  };
  std::size_t dots = s.find("..");
  std::size_t lo, hi;
  if (dots == std::string::npos) {
    lo = hi = number(s);
  } else {
    lo = number(s.substr(0, dots));
    hi = number(s.substr(dots + 2));
  }
  if (hi < lo) throw ParseError("degrees: empty range '" + s + "'");
  return {lo, hi};
}

int cmd_hh(const std::string& quiver_path, const std::string& degrees,
           const std::string& format, std::uint64_t budget, std::ostream& out) {
  auto [lo, hi] = parse_degree_range(degrees);
  Quiver q = load_quiver(quiver_path);
  std::vector<std::size_t> dims = hh_dim_table(q, hi, budget);
  if (format == "csv") {
    out << "n,dim\n";
    for (std::size_t n = lo; n <= hi; ++n) out << n << "," << dims[n] << "\n";
  } else if (format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t n = lo; n <= hi; ++n)
      rows.push_back({{"n", n}, {"dim", dims[n]}});
    out << nlohmann::json{{"dims", rows}}.dump() << "\n";
  } else {
    std::size_t wn = 1, wd = std::string("dim HH^n").size();
    for (std::size_t n = lo; n <= hi; ++n) {
      wn = std::max(wn, std::to_string(n).size());
      wd = std::max(wd, std::to_string(dims[n]).size());
    }
    out << std::string(wn - 1, ' ') << "n" << "  " << std::string(wd - 8, ' ')
        << "dim HH^n\n";
    for (std::size_t n = lo; n <= hi; ++n) {
      std::string ns = std::to_string(n), ds = std::to_string(dims[n]);
      out << std::string(wn - ns.size(), ' ') << ns << "  "
          << std::string(wd - ds.size(), ' ') << ds << "\n";
    }
  }
  return 0;
}

int cmd_decompose(const std::string& quiver_path, const std::string& degrees,
                  const std::string& format, std::uint64_t budget, std::ostream& out) {
  auto [lo, hi] = parse_degree_range(degrees);
  Quiver q = quiver_path.empty() ? Quiver::loops(2) : load_quiver(quiver_path);
  bool two_loops = q.num_vertices() == 1 && q.num_arrows() == 2 &&
                   q.arrow(0).src == q.arrow(0).tgt && q.arrow(1).src == q.arrow(1).tgt;
  if (!two_loops)
    throw DomainError(
        "decompose: sl2 decompositions are only computed for the two-loops "
        "quiver (one vertex, two loop arrows)");
  MultiplicityTable table = decompose_table(q, lo, hi, budget);
  if (format == "csv")
    out << emit_table_csv(table);
  else if (format == "json")
    out << emit_table_json(table) << "\n";
  else
    out << emit_table_text(table);
  return 0;
}

int cmd_bracket(const std::string& quiver_path, const std::string& e1,
                const std::string& e2, bool reduce, const std::string& format,
                std::uint64_t budget, std::ostream& out) {
  Quiver q = load_quiver(quiver_path);
  Cochain f = parse_cochain(q, e1);
  Cochain g = parse_cochain(q, e2);
  Cochain result(0);
  if (!f.is_zero() && !g.is_zero()) {
    if (reduce) {
      CohomologyGroup target = cohomology(q, f.degree() + g.degree() - 1, budget);
      result = induced_bracket(q, f, g, target);
    } else {
      result = bracket_q(q, f, g);
    }
  }
  if (format == "csv") {
    out << "coef,path,shortcut\n";
    for (const auto& [pair, coef] : result.terms())
      out << coef.str() << "," << pair.gamma.str(q) << ","
          << (pair.x_is_vertex ? "@" + q.vertex_id(pair.x) : q.arrow(pair.x).id) << "\n";
  } else if (format == "json") {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [pair, coef] : result.terms())
      terms.push_back(
          {{"coef", coef.str()},
           {"path", pair.gamma.str(q)},
           {"shortcut", pair.x_is_vertex ? "@" + q.vertex_id(pair.x)
                                         : q.arrow(pair.x).id}});
    out << nlohmann::json{{"degree", result.degree()}, {"terms", terms}}.dump() << "\n";
  } else {
    out << format_cochain(q, result) << "\n";
  }
  return 0;
}

int cmd_verify(const std::string& quiver_path, const std::string& suite,
               std::uint64_t seed, std::uint64_t budget, std::ostream& out) {
  Quiver q = load_quiver(quiver_path);
  std::vector<CheckResult> checks;
  if (suite == "properties" || suite == "all") {
    std::vector<CheckResult> c = run_property_suite(q, seed, 200, budget);
    checks.insert(checks.end(), c.begin(), c.end());
  }
  if (suite == "oracle" || suite == "all") {
    std::vector<CheckResult> c = run_oracle_suite(q, seed, 4, budget);
    checks.insert(checks.end(), c.begin(), c.end());
  }
  std::size_t failed = 0;
  for (const CheckResult& c : checks) {
    out << (c.ok ? "ok   " : "FAIL ") << c.name;
    if (!c.detail.empty()) out << " (" << c.detail << ")";
    out << "\n";
    if (!c.ok) ++failed;
  }
  if (failed == 0) {
    out << "all " << checks.size() << " checks passed\n";
    return 0;
  }
  out << failed << " of " << checks.size() << " checks failed\n";
  return 1;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  try {
    CLI::App app{"Hochschild cohomology of radical-square-zero path algebras:\n"
                 "dimensions, Gerstenhaber brackets, sl2 decompositions and\n"
                 "a brute-force cross-check.",
                 "qhh"};
    app.require_subcommand(1);
    std::uint64_t budget = default_budget();

    std::string quiver_path, degrees, format = "text";
    std::string e1, e2, suite = "all";
    std::uint64_t seed = 1;
    bool reduce = false;

    auto add_format = [&format](CLI::App* cmd) {
      cmd->add_option("--format", format, "Output format")
          ->check(CLI::IsMember({"text", "csv", "json"}));
    };
    auto add_budget = [&budget](CLI::App* cmd) {
      cmd->add_option("--budget", budget, "Basis enumeration budget (paths per degree)");
    };

    CLI::App* hh = app.add_subcommand("hh", "Print dim HH^n over a degree range");
    hh->add_option("--quiver", quiver_path, "Quiver JSON file")->required();
    hh->add_option("--degrees", degrees, "Degree range a..b or a single degree")
        ->required();
    add_format(hh);
    add_budget(hh);

    CLI::App* dec = app.add_subcommand(
        "decompose", "Print sl2 multiplicity tables for the two-loops quiver");
    dec->add_option("--quiver", quiver_path,
                    "Quiver JSON file (defaults to the two-loops quiver)");
    dec->add_option("--degrees", degrees, "Degree range a..b or a single degree")
        ->required();
    add_format(dec);
    add_budget(dec);

    CLI::App* br = app.add_subcommand(
        "bracket", "Bracket two elements given as formal sums like 1*(ab,a) - 2*(ba,b)");
    br->add_option("--quiver", quiver_path, "Quiver JSON file")->required();
    br->add_option("element1", e1, "Left element")->required();
    br->add_option("element2", e2, "Right element")->required();
    br->add_flag("--cohomology", reduce, "Reduce the result modulo coboundaries");
    add_format(br);
    add_budget(br);

    CLI::App* ver = app.add_subcommand("verify", "Run the identity and referee suites");
    ver->add_option("--quiver", quiver_path, "Quiver JSON file")->required();
    ver->add_option("suite", suite, "Which suite to run")
        ->check(CLI::IsMember({"properties", "oracle", "all"}));
    ver->add_option("--seed", seed, "Random seed for the suites");
    add_budget(ver);

    try {
      std::reverse(args.begin(), args.end());
      app.parse(std::move(args));
    } catch (const CLI::CallForHelp&) {
      out << app.help();
      return 0;
    } catch (const CLI::ParseError& e) {
      err << "error: " << e.what() << "\n";
      return 2;
    }
    if (budget == 0) throw ParseError("budget must be positive");

    if (hh->parsed()) return cmd_hh(quiver_path, degrees, format, budget, out);
    if (dec->parsed()) return cmd_decompose(quiver_path, degrees, format, budget, out);
    if (br->parsed()) return cmd_bracket(quiver_path, e1, e2, reduce, format, budget, out);
    return cmd_verify(quiver_path, suite, seed, budget, out);
  } catch (const BudgetError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 4;
  }
}

}  // namespace qhh
