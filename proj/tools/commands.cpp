#include "commands.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>

#include "expr.hpp"
#include "qabel/abel.hpp"

namespace qabel::cli {

namespace {

std::string params_text(const Params& params) {
  if (params.empty()) return "-";
  std::string out;
  for (const auto& [name, value] : params) {
    if (!out.empty()) out += ',';
    out += name + "=" + std::to_string(value);
  }
  return out;
}

std::vector<std::string> family_names() {
  return {"abelc", "A", "G", "B", "Bg", "w", "S"};
}

// "G:3" -> (G, 3); the mutated member's constant term is shifted by one.
Families parse_mutation(const std::string& spec) {
  const auto colon = spec.find(':');
  const auto family = family_from_name(spec.substr(0, colon));
  if (colon == std::string::npos || !family) {
    throw CLI::ValidationError("--mutate", "expected FAMILY:N, got '" + spec + "'");
  }
  int n = 0;
  try {
    n = std::stoi(spec.substr(colon + 1));
  } catch (const std::exception&) {
    throw CLI::ValidationError("--mutate", "expected FAMILY:N, got '" + spec + "'");
  }
  return Families::mutated(*family, n);
}

struct VerifyOptions {
  std::vector<std::string> ids;
  RangeOptions ranges;
  bool json = false;
  int jobs = 1;
  std::string mutate;
};

CommandResult run_verify(const VerifyOptions& opts) {
  const Families families =
      opts.mutate.empty() ? Families::standard() : parse_mutation(opts.mutate);
  for (const auto& id : opts.ids) identity_info(id);
  const auto results = run_checks(opts.ids, opts.ranges, opts.jobs, families);
  const bool ok = std::all_of(results.begin(), results.end(),
                              [](const CheckResult& r) { return r.passed(); });
  return {opts.json ? json_report(results) : text_report(results), "",
          ok ? kExitOk : kExitCheckFailed};
}

CommandResult run_list() {
  std::ostringstream os;
  std::size_t id_width = 2;
  std::size_t range_width = 6;
  for (const auto& info : identity_catalog()) {
    id_width = std::max(id_width, info.id.size());
    range_width = std::max(range_width, info.range_text().size());
  }
  os << std::left << std::setw(static_cast<int>(id_width)) << "id" << "  "
     << std::setw(static_cast<int>(range_width)) << "ranges" << "  statement\n";
  for (const auto& info : identity_catalog()) {
    os << std::setw(static_cast<int>(id_width)) << info.id << "  "
       << std::setw(static_cast<int>(range_width)) << info.range_text() << "  " << info.summary
       << '\n';
  }
  return {os.str(), "", kExitOk};
}

CommandResult run_expand(const std::string& text) {
  const AbelCoefficients expansion = abel_expand(eval_expr(parse_expr(text)));
  std::ostringstream os;
  for (std::size_t k = 0; k < expansion.coeffs.size(); ++k) {
    os << k << ": " << expansion.coeffs[k].to_string() << '\n';
  }
  return {os.str(), "", kExitOk};
}

CommandResult run_lagrange(const std::string& mode_name, const std::string& series, int terms) {
  static const std::map<std::string, LagrangeMode> modes{
      {"plain", LagrangeMode::plain},
      {"general", LagrangeMode::general_b},
      {"buermann", LagrangeMode::buermann}};
  const auto coeffs = lagrange_coeffs(builtin_series(series, terms), modes.at(mode_name), terms);
  std::ostringstream os;
  for (std::size_t k = 0; k < coeffs.size(); ++k) os << k << ": " << coeffs[k].to_string() << '\n';
  return {os.str(), "", kExitOk};
}

CommandResult run_eval(const std::string& text, const std::string& q,
                       const std::map<Symbol, std::string>& values) {
  std::map<Symbol, mpq_class> point;
  for (const auto& [s, v] : values) point[s] = parse_rational(v);
  const MPoly p = eval_expr(parse_expr(text));
  return {eval_at(p, parse_rational(q), point).get_str() + "\n", "", kExitOk};
}

}  // namespace

std::string text_report(const std::vector<CheckResult>& results) {
  std::ostringstream os;
  std::size_t passed = 0;
  for (const auto& r : results) {
    if (r.passed()) ++passed;
    os << (r.passed() ? "PASS" : "FAIL") << "  " << std::left << std::setw(11) << r.identity_id
       << ' ' << std::setw(14) << params_text(r.params) << ' ' << std::right << std::fixed
       << std::setprecision(2) << std::setw(9) << r.elapsed.count() << " ms\n";
    if (r.difference) os << "      difference " << *r.difference << '\n';
  }
  os << results.size() << " checks, " << passed << " passed, " << results.size() - passed
     << " failed\n";
  return os.str();
}

std::string json_report(const std::vector<CheckResult>& results) {
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  std::size_t passed = 0;
  for (const auto& r : results) {
    if (r.passed()) ++passed;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [name, value] : r.params) params[name] = value;
    entries.push_back({{"identity", r.identity_id},
                       {"params", params},
                       {"status", r.passed() ? "pass" : "fail"},
                       {"difference", r.difference ? nlohmann::ordered_json(*r.difference)
                                                   : nlohmann::ordered_json(nullptr)},
                       {"elapsed_ms", r.elapsed.count()}});
  }
  const nlohmann::ordered_json report{{"entries", entries},
                                      {"total", results.size()},
                                      {"passed", passed},
                                      {"failed", results.size() - passed}};
  return report.dump(2) + "\n";
}

CommandResult run_command(const std::vector<std::string>& args) {
  CLI::App app{"Exact q-Abel polynomial computations and identity checks", "qabel"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "qabel 0.1.0");

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check registered identities");
  verify_cmd->add_option("--id", verify.ids, "Identity id (repeatable; default: all)");
  verify_cmd->add_option("--max-n", verify.ranges.max_n, "Largest degree parameter")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  verify_cmd->add_option("--order", verify.ranges.order, "Series truncation order")
      ->check(CLI::Range(0, 24))
      ->capture_default_str();
  verify_cmd->add_flag("--json", verify.json, "Print the report as JSON");
  verify_cmd->add_option("--jobs", verify.jobs, "Worker threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify_cmd->add_option("--mutate", verify.mutate, "Perturb one family member (FAMILY:N)")
      ->group("");

  std::string family;
  int degree = 0;
  auto* poly_cmd = app.add_subcommand("poly", "Print a family member in canonical form");
  poly_cmd->add_option("family", family, "abelc, A, G, B, Bg, w or S")
      ->required()
      ->check(CLI::IsMember(family_names()));
  poly_cmd->add_option("n", degree, "Index")->required()->check(CLI::Range(0, 64));

  std::string expand_text;
  auto* expand_cmd = app.add_subcommand("expand", "Coefficients in the basis G_k(x,a,b)");
  expand_cmd->add_option("expr", expand_text, "Polynomial expression")->required();

  std::string mode;
  std::string series;
  int terms = 0;
  auto* lagrange_cmd = app.add_subcommand("lagrange", "q-Lagrange coefficients c_0..c_N");
  lagrange_cmd->add_option("--mode", mode, "plain, general or buermann")
      ->required()
      ->check(CLI::IsMember({"plain", "general", "buermann"}));
  std::vector<std::string> series_names;
  for (auto name : builtin_series_names()) series_names.emplace_back(name);
  lagrange_cmd->add_option("--f", series, "e_xz, E_xz, E_neg_yz or z")
      ->required()
      ->check(CLI::IsMember(series_names));
  lagrange_cmd->add_option("--terms", terms, "Last coefficient index N")
      ->required()
      ->check(CLI::Range(0, 24));

  std::string eval_text;
  std::string q_value;
  std::map<Symbol, std::string> values;
  auto* eval_cmd = app.add_subcommand("eval", "Exact rational value of an expression");
  eval_cmd->add_option("expr", eval_text, "Expression")->required();
  eval_cmd->add_option("--q", q_value, "Value of q (integer or p/r)")->required();
  for (Symbol s : {Symbol::x, Symbol::y, Symbol::a, Symbol::b, Symbol::t}) {
    eval_cmd->add_option_function<std::string>(
        "--" + std::string(symbol_name(s)), [&values, s](const std::string& v) { values[s] = v; },
        "Value of " + std::string(symbol_name(s)));
  }

  auto* list_cmd = app.add_subcommand("list", "Registered identities and parameter ranges");

  std::ostringstream out;
  std::ostringstream err;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return {out.str(), err.str(), code == 0 ? kExitOk : kExitUsage};
  }

  try {
    if (verify_cmd->parsed()) return run_verify(verify);
    if (poly_cmd->parsed()) {
      return {abel_poly(*family_from_name(family), degree).to_string() + "\n", "", kExitOk};
    }
    if (expand_cmd->parsed()) return run_expand(expand_text);
    if (lagrange_cmd->parsed()) return run_lagrange(mode, series, terms);
    if (eval_cmd->parsed()) return run_eval(eval_text, q_value, values);
    if (list_cmd->parsed()) return run_list();
  } catch (const CLI::ValidationError& e) {
    return {"", std::string("error: ") + e.what() + "\n", kExitUsage};
  } catch (const std::exception& e) {
    return {"", std::string("error: ") + e.what() + "\n", kExitUsage};
  }
  return {"", "error: no command\n", kExitUsage};
}

}  // namespace qabel::cli
