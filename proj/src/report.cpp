#include "hypsum/report.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "hypsum/errors.hpp"
#include "text.hpp"

namespace hypsum {

namespace {

using detail::sig_digits;

std::string machine(double x) { return sig_digits(x, 17); }

std::string trim(std::string_view text) {
  const auto first = text.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(" \t");
  return std::string(text.substr(first, last - first + 1));
}

}  // namespace

OutputFormat parse_output_format(std::string_view text) {
  if (text == "human") return OutputFormat::Human;
  if (text == "json") return OutputFormat::Json;
  if (text == "csv") return OutputFormat::Csv;
  throw ConfigError("unknown format '" + std::string(text) + "' (expected human, json or csv)");
}

nlohmann::json to_json(const SummationResult& r) {
  return {{"value", r.value},
          {"terms_used", r.terms_used},
          {"tail_estimate", r.tail_estimate},
          {"remainder", r.remainder},
          {"status", std::string(to_string(r.status))}};
}

SummationResult summation_from_json(const nlohmann::json& j) {
  SummationResult r;
  r.value = j.at("value").get<double>();
  r.terms_used = j.at("terms_used").get<std::uint64_t>();
  r.tail_estimate = j.at("tail_estimate").get<double>();
  r.remainder = j.at("remainder").get<double>();
  r.status = summation_status_from_string(j.at("status").get<std::string>());
  return r;
}

nlohmann::json to_json(const IdentityCase& c) {
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& pair : c.pairs) pairs.push_back({{"f", pair.f}, {"m", pair.shift}});
  return {{"identity", std::string(identity_name(c.id))},
          {"parameters", c.parameters},
          {"pairs", pairs},
          {"rel_tol", c.rel_tol}};
}

IdentityCase identity_case_from_json(const nlohmann::json& j) {
  IdentityCase c;
  const auto name = j.at("identity").get<std::string>();
  const auto id = parse_identity(name);
  if (!id) throw ConfigError("unknown identity '" + name + "'");
  c.id = *id;
  c.parameters = j.at("parameters").get<std::map<std::string, double>>();
  for (const auto& pair : j.at("pairs")) {
    c.pairs.push_back({pair.at("f").get<double>(), pair.at("m").get<unsigned>()});
  }
  c.rel_tol = j.at("rel_tol").get<double>();
  return c;
}

nlohmann::json to_json(const VerificationReport& r) {
  return {{"case", to_json(r.identity_case)},
          {"lhs", r.lhs},
          {"lhs_summation", to_json(r.lhs_summation)},
          {"rhs", r.rhs},
          {"abs_err", r.abs_err},
          {"rel_err", r.rel_err},
          {"verdict", std::string(to_string(r.verdict))},
          {"passed", r.passed()},
          {"precondition_note", r.precondition_note}};
}

VerificationReport report_from_json(const nlohmann::json& j) {
  VerificationReport r;
  r.identity_case = identity_case_from_json(j.at("case"));
  r.lhs = j.at("lhs").get<double>();
  r.lhs_summation = summation_from_json(j.at("lhs_summation"));
  r.rhs = j.at("rhs").get<double>();
  r.abs_err = j.at("abs_err").get<double>();
  r.rel_err = j.at("rel_err").get<double>();
  r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
  r.precondition_note = j.at("precondition_note").get<std::string>();
  return r;
}

nlohmann::json to_json(const TableRow& row) {
  return {{"identity", row.identity},
          {"symbolic", row.symbolic},
          {"closed", row.closed},
          {"direct", row.direct},
          {"rel_err", row.rel_err},
          {"summation", to_json(row.summation)}};
}

std::vector<ShiftedPair> parse_pairs(std::string_view text) {
  std::vector<ShiftedPair> pairs;
  if (trim(text).empty()) return pairs;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = std::min(text.find(',', start), text.size());
    const std::string token = trim(text.substr(start, end - start));
    const auto colon = token.find(':');
    if (colon == std::string::npos) {
      throw ConfigError("pair '" + token + "' is not of the form f:m");
    }
    const std::string f_text = token.substr(0, colon);
    const std::string m_text = token.substr(colon + 1);
    double f = 0.0;
    unsigned m = 0;
    const auto f_res = std::from_chars(f_text.data(), f_text.data() + f_text.size(), f);
    const auto m_res = std::from_chars(m_text.data(), m_text.data() + m_text.size(), m);
    if (f_res.ec != std::errc{} || f_res.ptr != f_text.data() + f_text.size() || f_text.empty()) {
      throw ConfigError("invalid pair parameter '" + f_text + "' in '" + token + "'");
    }
    if (m_res.ec != std::errc{} || m_res.ptr != m_text.data() + m_text.size() || m == 0) {
      throw ConfigError("invalid pair shift '" + m_text + "' in '" + token +
                        "' (positive integer expected)");
    }
    pairs.push_back({f, m});
    start = end + 1;
  }
  return pairs;
}

std::string format_pairs(const std::vector<ShiftedPair>& pairs) {
  std::string out;
  for (const auto& pair : pairs) {
    if (!out.empty()) out += ',';
    out += detail::round_trip(pair.f) + ":" + std::to_string(pair.shift);
  }
  return out;
}

std::string format_parameters(const IdentityCase& c) {
  std::string out;
  for (std::string_view name : identity_parameters(c.id)) {
    const auto it = c.parameters.find(std::string(name));
    if (it == c.parameters.end()) continue;
    if (!out.empty()) out += ' ';
    out += std::string(name) + "=" + detail::round_trip(it->second);
  }
  if (!c.pairs.empty()) {
    if (!out.empty()) out += ' ';
    out += "pairs=" + format_pairs(c.pairs);
  }
  return out;
}

std::string csv_escape(std::string_view field) {
  if (field.find_first_of(",\"\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

std::string csv_header_reports() {
  return "identity,parameters,lhs,rhs,abs_err,rel_err,verdict,terms_used,tail_estimate,status,"
         "precondition_note";
}

std::string csv_row(const VerificationReport& r) {
  std::ostringstream out;
  out << identity_name(r.identity_case.id) << ',' << csv_escape(format_parameters(r.identity_case))
      << ',' << machine(r.lhs) << ',' << machine(r.rhs) << ',' << machine(r.abs_err) << ','
      << machine(r.rel_err) << ',' << to_string(r.verdict) << ',' << r.lhs_summation.terms_used
      << ',' << machine(r.lhs_summation.tail_estimate) << ',' << to_string(r.lhs_summation.status)
      << ',' << csv_escape(r.precondition_note);
  return out.str();
}

std::string csv_header_table() { return "identity,symbolic,closed,direct,rel_err"; }

std::string csv_row(const TableRow& row) {
  return csv_escape(row.identity) + ',' + csv_escape(row.symbolic) + ',' + machine(row.closed) +
         ',' + machine(row.direct) + ',' + machine(row.rel_err);
}

std::string csv_header_summation() { return "value,terms_used,tail_estimate,remainder,status"; }

std::string csv_row(const SummationResult& r) {
  return machine(r.value) + ',' + std::to_string(r.terms_used) + ',' + machine(r.tail_estimate) +
         ',' + machine(r.remainder) + ',' + std::string(to_string(r.status));
}

}  // namespace hypsum
