#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "toricmg/classifier.hpp"

namespace toricmg {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "0.3.0";

Json decomposition_to_json(const Decomposition& d);
Decomposition decomposition_from_json(const Json& j);

/// Every field is always present (null when unknown) so the key order is
/// fixed. Timings are included only on request since they vary run to run.
Json report_to_json(const ClassificationReport& r, bool with_timings = false);
/// Inverse of report_to_json. Throws BadParameters on a malformed object.
ClassificationReport report_from_json(const Json& j);

Json budget_to_json(const Budget& b);
Json make_document(const std::vector<ClassificationReport>& reports, const Budget& budget, bool with_timings = false);

/// Schema violations of a report object or a whole document; empty when valid.
std::vector<std::string> validate_report(const Json& j);
std::vector<std::string> validate_document(const Json& j);

/// Multi-line human-readable summary.
std::string format_report_text(const ClassificationReport& r);
std::string format_decomposition_text(const Decomposition& d);

}  // namespace toricmg
