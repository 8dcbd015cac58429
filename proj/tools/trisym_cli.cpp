// trisym: catalog, coefficients and Einstein metrics of three-locally-symmetric spaces.
#include <CLI11.hpp>
#include <iostream>
#include <optional>

#include "trisym/coeffs/isotropy.hpp"
#include "trisym/einstein/einstein.hpp"
#include "trisym/io/render.hpp"
#include "trisym/numeric/errors.hpp"
#include "trisym/verify/verify.hpp"

using namespace trisym;
using io::Json;

namespace {

enum Exit { kPass = 0, kUsage = 1, kVerifyFailed = 2, kIntegrity = 3 };

struct CaseFlags {
  std::optional<int> l, i, j, k;

  std::map<std::string, int> params() const {
    std::map<std::string, int> out;
    if (l) out["l"] = *l;
    if (i) out["i"] = *i;
    if (j) out["j"] = *j;
    if (k) out["k"] = *k;
    return out;
  }
  void attach(CLI::App* cmd) {
    cmd->add_option("--l", l, "rank parameter l");
    cmd->add_option("--i", i, "parameter i");
    cmd->add_option("--j", j, "parameter j");
    cmd->add_option("--k", k, "parameter k (A-II: l = 2k - 1)");
  }
};

std::vector<std::string> case_warnings(const SpaceCase& c, const IsotropyData& iso) {
  std::vector<std::string> w;
  if (c.flagged) w.push_back(c.display_name() + ": two summands are equivalent h-modules; diagonal metrics do not cover all invariant metrics");
  if (iso.boundary()) w.push_back(c.display_name() + ": some a_i = 1/2 (h acts trivially on that summand)");
  return w;
}

int cmd_list(int max_rank, const std::string& format) {
  if (max_rank < 1) throw InvalidArgument("--max-rank must be at least 1");
  const auto cases = enumerate_cases(max_rank);
  if (format == "json") {
    Json payload;
    payload["max_rank"] = max_rank;
    payload["count"] = cases.size();
    payload["cases"] = Json::array();
    for (const auto& c : cases) {
      Json j = io::case_json(c);
      const CaseDims d = case_dims(c);
      j["dim_h"] = d.dim_h;
      j["d"] = d.d;
      payload["cases"].push_back(std::move(j));
    }
    std::cout << io::dump(io::envelope("list", std::move(payload), {}));
    return kPass;
  }
  const std::vector<std::string> header{"tag", "type", "params", "g", "h", "d1", "d2", "d3", "flagged"};
  io::Rows rows;
  for (const auto& c : cases) {
    const CaseDims d = case_dims(c);
    rows.push_back({c.tag(), c.label, io::params_string(c), c.ambient.str(), c.isotropy_type(), std::to_string(d.d[0]),
                    std::to_string(d.d[1]), std::to_string(d.d[2]), c.flagged ? "yes" : ""});
  }
  std::cout << (format == "csv" ? io::render_csv(header, rows) : io::render_table(header, rows));
  return kPass;
}

int cmd_dims(const std::string& selector, const CaseFlags& flags, const std::string& format) {
  const SpaceCase c = select_case(selector, flags.params());
  const IsotropyData iso = coefficients_for_case(c);
  const GammaAnchor anchor = anchor_for_case(c);
  if (format == "json") {
    std::cout << io::dump(io::envelope("dims", io::isotropy_json(c, iso, anchor), case_warnings(c, iso)));
    return kPass;
  }
  const CaseDims d = case_dims(c);
  io::Rows rows = {
      {"case", c.display_name()},
      {"g", c.ambient.str() + " (dim " + std::to_string(dimension(c.ambient)) + ")"},
      {"h", c.isotropy_type() + " (dim " + std::to_string(d.dim_h) + ")"},
      {"d", io::dims_string(iso.dims)},
      {"gamma", io::triple_string(iso.gammas)},
      {"c", io::triple_string(iso.casimirs)},
      {"a", io::triple_string(iso.a)},
      {"A", iso.A.str()},
      {"anchor", "gamma_" + std::to_string(anchor.index) + " = " + anchor.gamma.str() + " (" + anchor.source + ")"},
  };
  std::cout << io::render_table({"field", "value"}, rows);
  for (const auto& w : case_warnings(c, iso)) std::cerr << "warning: " << w << "\n";
  return kPass;
}

int cmd_solve(const std::string& selector, const CaseFlags& flags, const std::vector<std::string>& a_text, int digits,
              const std::string& tol_text, const std::string& format) {
  if (selector.empty() == a_text.empty()) throw InvalidArgument("give either a case selector or --a p/q p/q p/q");
  if (digits < 0 || digits > 200) throw InvalidArgument("--digits must be in 0..200");
  const Rational tol = Rational::parse(tol_text);
  if (tol.sign() <= 0) throw InvalidArgument("--tol must be positive");

  Json payload;
  std::vector<std::string> warnings;
  Triple a;
  std::vector<EinsteinSolution> sols;
  bool applicable = true;
  if (!selector.empty()) {
    const CaseSolutions cs = solve_case(select_case(selector, flags.params()));
    warnings = case_warnings(cs.space, cs.iso);
    payload["case"] = io::case_json(cs.space);
    a = cs.iso.a;
    applicable = cs.applicable;
    if (!applicable) payload["note"] = cs.note;
    sols = cs.solutions;
  } else {
    if (a_text.size() != 3) throw InvalidArgument("--a takes exactly three rationals");
    for (size_t t = 0; t < 3; ++t) a[t] = Rational::parse(a_text[t]);
    payload["case"] = nullptr;
    sols = solve_einstein(a);
  }
  payload["a"] = Json::array();
  for (const auto& v : a) payload["a"].push_back(v.wire());
  payload["applicable"] = applicable;
  payload["count"] = sols.size();
  payload["tol"] = tol.wire();
  payload["solutions"] = Json::array();
  bool all_ok = true;
  io::Rows rows;
  for (size_t n = 0; n < sols.size(); ++n) {
    const auto& s = sols[n];
    const bool ok = verify_solution(a, s, tol);
    all_ok = all_ok && ok;
    Json j = io::to_json(s, digits);
    j["verified"] = ok;
    payload["solutions"].push_back(std::move(j));
    rows.push_back({std::to_string(n + 1), branch_name(s.branch), to_decimal(s.x[0], digits),
                    to_decimal(s.x[1], digits), to_decimal(s.x[2], digits), sign_name(s.einstein_constant_sign),
                    s.exact() ? "exact" : s.residual_bound.to_decimal(3 + static_cast<int>(-s.residual_bound.ilog2_abs() * 0.30103))});
  }
  if (!all_ok) warnings.push_back("a solution failed verification at tol " + tol.str());

  if (format == "json") {
    std::cout << io::dump(io::envelope("solve", std::move(payload), warnings));
  } else {
    std::cout << "a = " << io::triple_string(a) << ", " << sols.size() << " solution(s)\n";
    if (!applicable) std::cout << "not applicable: " << payload["note"].get<std::string>() << "\n";
    if (!rows.empty())
      std::cout << io::render_table({"#", "branch", "x1", "x2", "x3", "sign", "residual"}, rows);
    for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
  }
  return all_ok ? kPass : kIntegrity;
}

int cmd_verify(const std::string& scope, std::uint64_t seed, const std::string& tol_text, const std::string& format) {
  const Rational tol = Rational::parse(tol_text);
  if (tol.sign() <= 0) throw InvalidArgument("--tol must be positive");
  verify::Report rep;
  if (scope == "tables")
    rep = verify::verify_tables();
  else if (scope == "solutions")
    rep = verify::verify_solutions(tol);
  else if (scope == "properties")
    rep = verify::verify_properties(seed, tol);
  else
    rep = verify::verify_all(seed, tol);
  rep.scope = scope;

  if (format == "json") {
    Json payload;
    payload["scope"] = scope;
    payload["seed"] = seed;
    payload["passed"] = rep.passed();
    payload["failures"] = rep.failures();
    payload["checks"] = Json::array();
    for (const auto& c : rep.checks) payload["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    std::cout << io::dump(io::envelope("verify", std::move(payload), {}));
  } else {
    io::Rows rows;
    for (const auto& c : rep.checks) rows.push_back({c.passed ? "PASS" : "FAIL", c.name, c.detail});
    std::cout << io::render_table({"result", "check", "detail"}, rows);
    std::cout << rep.checks.size() - rep.failures() << "/" << rep.checks.size() << " passed\n";
  }
  return rep.passed() ? kPass : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Three-locally-symmetric spaces: catalog, isotropy data and invariant Einstein metrics"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  const std::vector<std::string> formats{"json", "table", "csv"};

  int max_rank = 8;
  std::string list_format = "json";
  auto* list = app.add_subcommand("list", "enumerate every case up to a rank");
  list->add_option("--max-rank", max_rank, "largest rank of g")->capture_default_str();
  list->add_option("--format", list_format)->check(CLI::IsMember(formats))->capture_default_str();

  std::string dims_selector, dims_format = "json";
  CaseFlags dims_flags;
  auto* dims = app.add_subcommand("dims", "dimensions and coefficients of one case");
  dims->add_option("selector", dims_selector, "type label (E7-II) or tag (InP17)")->required();
  dims_flags.attach(dims);
  dims->add_option("--format", dims_format)->check(CLI::IsMember({"json", "table"}))->capture_default_str();

  std::string solve_selector, solve_format = "json", solve_tol = "1e-20";
  std::vector<std::string> solve_a;
  int digits = 6;
  CaseFlags solve_flags;
  auto* solve = app.add_subcommand("solve", "invariant Einstein metrics of a case or a coefficient triple");
  solve->add_option("selector", solve_selector, "type label or tag");
  solve->add_option("--a", solve_a, "coefficients a1 a2 a3 as rationals")->expected(3);
  solve_flags.attach(solve);
  solve->add_option("--digits", digits, "decimal digits for display")->capture_default_str();
  solve->add_option("--tol", solve_tol, "certification tolerance on residuals")->capture_default_str();
  solve->add_option("--format", solve_format)->check(CLI::IsMember({"json", "table"}))->capture_default_str();

  std::string scope, verify_format = "table", verify_tol = "1e-20";
  std::uint64_t seed = 42;
  auto* ver = app.add_subcommand("verify", "run the reproduction checks");
  ver->add_option("scope", scope, "tables, solutions, properties or all")
      ->required()
      ->check(CLI::IsMember({"tables", "solutions", "properties", "all"}));
  ver->add_option("--seed", seed, "seed for randomized checks")->capture_default_str();
  ver->add_option("--tol", verify_tol, "certification tolerance")->capture_default_str();
  ver->add_option("--format", verify_format)->check(CLI::IsMember({"json", "table"}))->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*list) return cmd_list(max_rank, list_format);
    if (*dims) return cmd_dims(dims_selector, dims_flags, dims_format);
    if (*solve) return cmd_solve(solve_selector, solve_flags, solve_a, digits, solve_tol, solve_format);
    if (*ver) return cmd_verify(scope, seed, verify_tol, verify_format);
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Unsupported& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kIntegrity;
  }
  return kUsage;
}
