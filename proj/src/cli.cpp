#include "hypsum/cli.hpp"

#include <charconv>
#include <iomanip>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "hypsum/errors.hpp"
#include "hypsum/report.hpp"
#include "hypsum/verify.hpp"
#include "text.hpp"

namespace hypsum::cli {

namespace {

using detail::sig_digits;
using nlohmann::json;

constexpr const char* kParameterFlags[] = {"a", "b", "c", "m", "p", "f", "f1", "f2", "mu"};

struct GlobalOptions {
  std::string format = "human";
  double rel_tol = 1e-10;
  std::uint64_t max_terms = kDefaultMaxTerms;
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

std::string trim(std::string_view text) {
  const auto first = text.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(" \t");
  return std::string(text.substr(first, last - first + 1));
}

double parse_number(std::string_view raw) {
  const std::string token = trim(raw);
  double value = 0.0;
  const char* begin = token.data();
  const char* end = token.data() + token.size();
  if (!token.empty() && *begin == '+') ++begin;
  const auto res = std::from_chars(begin, end, value);
  if (token.empty() || res.ec != std::errc{} || res.ptr != end || !std::isfinite(value)) {
    throw ConfigError("invalid number '" + token + "'");
  }
  return value;
}

std::string human(double x) { return sig_digits(x, 12); }

void print_json(std::ostream& out, const json& document) { out << document.dump(2) << '\n'; }

std::string list_identities() {
  std::string out;
  for (IdentityId id : all_identities()) {
    if (!out.empty()) out += ", ";
    out += identity_name(id);
  }
  return out;
}

IdentityId require_identity(const std::string& name) {
  const auto id = parse_identity(name);
  if (!id) {
    throw ConfigError("unknown identity '" + name + "'; valid ids: " + list_identities());
  }
  return *id;
}

json series_spec_json(const SeriesSpec& spec) {
  return {{"numerators", spec.numerators}, {"denominators", spec.denominators}};
}

// ---------------------------------------------------------------- eval

int cmd_eval(const std::string& spec_text, const GlobalOptions& g, OutputFormat format,
             std::ostream& out, std::ostream& err) {
  const SeriesSpec spec = parse_series_spec(spec_text);
  json inputs = series_spec_json(spec);
  inputs["spec"] = spec_text;
  inputs["rel_tol"] = g.rel_tol;
  inputs["max_terms"] = g.max_terms;

  SummationResult result;
  try {
    result = sum_series(spec, g.rel_tol, g.max_terms);
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    if (format == OutputFormat::Json) {
      print_json(out, {{"command", "eval"},
                       {"inputs", inputs},
                       {"results", json::array()},
                       {"summary", {{"error", e.what()}, {"exit_code", kNotApplicable}}}});
    } else {
      err << "eval: " << e.what() << '\n';
    }
    return kNotApplicable;
  }

  const int code = result.status == SummationStatus::MaxTermsReached ? kNotApplicable : kSuccess;
  switch (format) {
    case OutputFormat::Json:
      print_json(out, {{"command", "eval"},
                       {"inputs", inputs},
                       {"results", json::array({to_json(result)})},
                       {"summary", {{"status", to_string(result.status)}, {"exit_code", code}}}});
      break;
    case OutputFormat::Csv:
      out << csv_header_summation() << '\n' << csv_row(result) << '\n';
      break;
    case OutputFormat::Human:
      out << "value          " << human(result.value) << '\n'
          << "terms_used     " << result.terms_used << '\n'
          << "tail_estimate  " << human(result.tail_estimate) << '\n'
          << "remainder      " << human(result.remainder) << '\n'
          << "status         " << to_string(result.status) << '\n';
      break;
  }
  return code;
}

// ---------------------------------------------------------------- verify / sweep

struct IdentityFlags {
  std::string identity;
  std::map<std::string, std::string> values;
  std::string pairs;
};

void add_identity_flags(CLI::App* sub, IdentityFlags& flags) {
  sub->add_option("--identity", flags.identity, "Identity id (eq1.1 ... eq2.8, telescope)")
      ->required();
  for (const char* name : kParameterFlags) {
    sub->add_option(std::string("--") + name, flags.values[name]);
  }
  sub->add_option("--pairs", flags.pairs, "Shifted pairs f:m, comma separated (eq2.2)");
}

// Only the flags the user actually passed.
std::map<std::string, std::string> given_values(const CLI::App* sub, const IdentityFlags& flags) {
  std::map<std::string, std::string> given;
  for (const char* name : kParameterFlags) {
    if (sub->count(std::string("--") + name) > 0) given[name] = flags.values.at(name);
  }
  return given;
}

void render_report_human(std::ostream& out, const VerificationReport& r) {
  const std::string params = format_parameters(r.identity_case);
  out << "identity     " << identity_name(r.identity_case.id) << '\n'
      << "parameters   " << (params.empty() ? "(none)" : params) << '\n';
  if (r.verdict != Verdict::NotApplicable) {
    out << "lhs          " << sig_digits(r.lhs, 15) << '\n'
        << "rhs          " << sig_digits(r.rhs, 15) << '\n'
        << "abs_err      " << human(r.abs_err) << '\n'
        << "rel_err      " << human(r.rel_err) << '\n'
        << "rel_tol      " << human(r.identity_case.rel_tol) << '\n'
        << "terms_used   " << r.lhs_summation.terms_used << '\n'
        << "status       " << to_string(r.lhs_summation.status) << '\n';
  }
  out << "note         " << r.precondition_note << '\n'
      << "verdict      " << to_string(r.verdict) << '\n';
}

int cmd_verify(const CLI::App* sub, const IdentityFlags& flags, const GlobalOptions& g,
               OutputFormat format, std::ostream& out) {
  IdentityCase c;
  c.id = require_identity(flags.identity);
  c.rel_tol = g.rel_tol;
  for (const auto& [name, text] : given_values(sub, flags)) c.parameters[name] = parse_number(text);
  if (sub->count("--pairs") > 0) c.pairs = parse_pairs(flags.pairs);
  validate_case(c);

  const VerificationReport report = evaluate_case(c, g.max_terms);
  const int code = report.verdict == Verdict::Passed   ? kSuccess
                   : report.verdict == Verdict::Failed ? kVerificationFailed
                                                       : kNotApplicable;
  switch (format) {
    case OutputFormat::Json:
      print_json(out, {{"command", "verify"},
                       {"inputs", {{"case", to_json(c)}, {"max_terms", g.max_terms}}},
                       {"results", json::array({to_json(report)})},
                       {"summary", {{"verdict", to_string(report.verdict)}, {"exit_code", code}}}});
      break;
    case OutputFormat::Csv:
      out << csv_header_reports() << '\n' << csv_row(report) << '\n';
      break;
    case OutputFormat::Human:
      render_report_human(out, report);
      break;
  }
  return code;
}

int cmd_sweep(const CLI::App* sub, const IdentityFlags& flags, const GlobalOptions& g,
              OutputFormat format, std::ostream& out) {
  const IdentityId id = require_identity(flags.identity);
  ParameterGrid grid;
  for (const auto& [name, text] : given_values(sub, flags)) grid[name] = parse_number_list(text);
  SweepOptions options;
  options.max_terms = g.max_terms;
  options.threads = g.threads;
  if (sub->count("--pairs") > 0) options.pairs = parse_pairs(flags.pairs);
  if (!options.pairs.empty() && !identity_takes_pairs(id)) {
    throw ConfigError(std::string(identity_name(id)) + " takes no shifted pairs");
  }

  const auto reports = sweep(id, grid, g.rel_tol, g.seed, options);
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t not_applicable = 0;
  for (const auto& r : reports) {
    if (r.verdict == Verdict::Passed) ++passed;
    if (r.verdict == Verdict::Failed) ++failed;
    if (r.verdict == Verdict::NotApplicable) ++not_applicable;
  }
  const int code = failed == 0 ? kSuccess : kVerificationFailed;

  switch (format) {
    case OutputFormat::Json: {
      json results = json::array();
      for (const auto& r : reports) results.push_back(to_json(r));
      json grid_json = json::object();
      for (const auto& [name, values] : grid) grid_json[name] = values;
      print_json(out, {{"command", "sweep"},
                       {"inputs",
                        {{"identity", identity_name(id)},
                         {"grid", grid_json},
                         {"pairs", format_pairs(options.pairs)},
                         {"rel_tol", g.rel_tol},
                         {"seed", g.seed},
                         {"max_terms", g.max_terms}}},
                       {"results", results},
                       {"summary",
                        {{"points", reports.size()},
                         {"passed", passed},
                         {"failed", failed},
                         {"not_applicable", not_applicable},
                         {"exit_code", code}}}});
      break;
    }
    case OutputFormat::Csv:
      out << csv_header_reports() << '\n';
      for (const auto& r : reports) out << csv_row(r) << '\n';
      out << "# summary: points=" << reports.size() << " passed=" << passed
          << " failed=" << failed << " n/a=" << not_applicable << '\n';
      break;
    case OutputFormat::Human:
      out << std::left << std::setw(36) << "parameters" << std::setw(20) << "lhs"
          << std::setw(20) << "rhs" << std::setw(12) << "rel_err" << std::setw(10) << "terms"
          << std::setw(8) << "verdict" << "  note\n";
      for (const auto& r : reports) {
        const bool na = r.verdict == Verdict::NotApplicable;
        out << std::left << std::setw(36) << format_parameters(r.identity_case) << std::setw(20)
            << (na ? "-" : human(r.lhs)) << std::setw(20) << (na ? "-" : human(r.rhs))
            << std::setw(12) << (na ? "-" : sig_digits(r.rel_err, 3)) << std::setw(10)
            << (na ? std::string("-") : std::to_string(r.lhs_summation.terms_used))
            << std::setw(8) << to_string(r.verdict) << "  " << r.precondition_note << '\n';
      }
      out << "summary: " << reports.size() << " points, " << passed << " passed, " << failed
          << " failed, " << not_applicable << " n/a\n";
      break;
  }
  return code;
}

// ---------------------------------------------------------------- table

int cmd_table(const GlobalOptions& g, OutputFormat format, std::ostream& out) {
  const double threshold = g.rel_tol;
  const auto rows = ramanujan_table(std::min(1e-12, threshold), g.max_terms);
  bool all_ok = true;
  for (const auto& row : rows) all_ok = all_ok && row.rel_err <= threshold;
  const int code = all_ok ? kSuccess : kVerificationFailed;

  switch (format) {
    case OutputFormat::Json: {
      json results = json::array();
      for (const auto& row : rows) {
        json j = to_json(row);
        j["passed"] = row.rel_err <= threshold;
        results.push_back(j);
      }
      print_json(out, {{"command", "table"},
                       {"inputs", {{"rel_tol", threshold}, {"max_terms", g.max_terms}}},
                       {"results", results},
                       {"summary", {{"all_passed", all_ok}, {"exit_code", code}}}});
      break;
    }
    case OutputFormat::Csv:
      out << csv_header_table() << '\n';
      for (const auto& row : rows) out << csv_row(row) << '\n';
      break;
    case OutputFormat::Human:
      out << std::left << std::setw(10) << "identity" << std::setw(36) << "symbolic"
          << std::setw(18) << "closed" << std::setw(18) << "direct" << "rel_err\n";
      for (const auto& row : rows) {
        out << std::left << std::setw(10) << row.identity << std::setw(36) << row.symbolic
            << std::setw(18) << human(row.closed) << std::setw(18) << human(row.direct)
            << sig_digits(row.rel_err, 3) << '\n';
      }
      out << (all_ok ? "all rows within " : "rows exceed ") << human(threshold) << '\n';
      break;
  }
  return code;
}

}  // namespace

SeriesSpec parse_series_spec(std::string_view text) {
  const auto semicolon = text.find(';');
  if (semicolon == std::string_view::npos) {
    throw ConfigError("series spec '" + std::string(text) +
                      "' needs ';' between upper and lower parameters");
  }
  if (text.find(';', semicolon + 1) != std::string_view::npos) {
    throw ConfigError("series spec '" + std::string(text) + "' has more than one ';'");
  }
  SeriesSpec spec;
  const std::string upper = trim(text.substr(0, semicolon));
  const std::string lower = trim(text.substr(semicolon + 1));
  if (!upper.empty()) spec.numerators = parse_number_list(upper);
  if (!lower.empty()) spec.denominators = parse_number_list(lower);
  return spec;
}

std::vector<double> parse_number_list(std::string_view text) {
  std::vector<double> values;
  if (trim(text).empty()) throw ConfigError("empty value list");
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = std::min(text.find(',', start), text.size());
    values.push_back(parse_number(text.substr(start, end - start)));
    start = end + 1;
  }
  return values;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Unit-argument hypergeometric sums: direct summation, closed forms, identity checks",
               "hypsum"};
  app.require_subcommand(1);

  GlobalOptions g;
  app.add_option("--format", g.format, "human | json | csv")->capture_default_str();
  app.add_option("--rel-tol", g.rel_tol, "Relative tolerance")->capture_default_str();
  app.add_option("--max-terms", g.max_terms, "Term budget per series")->capture_default_str();
  app.add_option("--seed", g.seed, "Sweep seed")->capture_default_str();
  app.add_option("--threads", g.threads, "Worker threads for sweep")->capture_default_str();

  auto* eval = app.add_subcommand("eval", "Sum a series given as \"a1,a2,...;b1,b2,...\"");
  eval->fallthrough();
  std::string spec_text;
  eval->add_option("spec", spec_text, "Upper parameters ';' lower parameters")->required();

  auto* verify = app.add_subcommand("verify", "Check one identity at one parameter point");
  verify->fallthrough();
  IdentityFlags verify_flags;
  add_identity_flags(verify, verify_flags);

  auto* sweep_cmd = app.add_subcommand("sweep", "Check one identity over a parameter grid");
  sweep_cmd->fallthrough();
  IdentityFlags sweep_flags;
  add_identity_flags(sweep_cmd, sweep_flags);

  auto* table = app.add_subcommand("table", "Ramanujan's sums and S_1..S_3");
  table->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    const OutputFormat format = parse_output_format(g.format);
    if (!(g.rel_tol > 0.0)) throw ConfigError("--rel-tol must be positive");
    if (g.max_terms == 0) throw ConfigError("--max-terms must be positive");
    if (g.threads == 0) throw ConfigError("--threads must be positive");

    if (eval->parsed()) return cmd_eval(spec_text, g, format, out, err);
    if (verify->parsed()) return cmd_verify(verify, verify_flags, g, format, out);
    if (sweep_cmd->parsed()) return cmd_sweep(sweep_cmd, sweep_flags, g, format, out);
    if (table->parsed()) return cmd_table(g, format, out);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace hypsum::cli
