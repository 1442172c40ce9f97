#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hypsum/series.hpp"
#include "hypsum/verify.hpp"

namespace hypsum {

enum class OutputFormat { Human, Json, Csv };

OutputFormat parse_output_format(std::string_view text);

nlohmann::json to_json(const SummationResult& result);
SummationResult summation_from_json(const nlohmann::json& j);

nlohmann::json to_json(const IdentityCase& identity_case);
IdentityCase identity_case_from_json(const nlohmann::json& j);

/// Every report field, including the lhs SummationResult diagnostics.
nlohmann::json to_json(const VerificationReport& report);
VerificationReport report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const TableRow& row);

/// "1.3:1,2.1:2" <-> pairs.
std::vector<ShiftedPair> parse_pairs(std::string_view text);
std::string format_pairs(const std::vector<ShiftedPair>& pairs);

/// "a=0.3 b=1.7" in signature order.
std::string format_parameters(const IdentityCase& identity_case);

/// CSV with 17 significant digits.
std::string csv_header_reports();
std::string csv_row(const VerificationReport& report);
std::string csv_header_table();
std::string csv_row(const TableRow& row);
std::string csv_header_summation();
std::string csv_row(const SummationResult& result);

/// Quotes a CSV field when it contains a comma, quote or newline.
std::string csv_escape(std::string_view field);

}  // namespace hypsum
