#pragma once

#include "symquot/auditor.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace symquot {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1.0";

/// {"schema_version", "command", "input", "result"}.
Json envelope(const std::string& command, Json input, Json result);

Json predicates_json(const PredicateRecord& p);
Json gamma_json(const GammaData& g);
Json certificate_json(const ExclusionCertificate& c);

/// Normalization, predicates, both gamma computations, orbit types and the
/// on-shell series head of one weight vector.
Json analyze_json(const WeightVector& input, std::size_t series_degree);

Json group_json(const DuValSpec& spec, bool with_molien, std::size_t series_degree = 10);
Json catalog_json(std::int64_t order);
Json audit_json(const AuditReport& r, bool certificates);

/// Verdict and obstruction totals of a scan; survivors are listed in full.
Json scan_summary_json(const std::vector<ScanRow>& rows, std::size_t n, std::int64_t alpha_max);

Json checks_json(const std::vector<ArgumentCheck>& checks);

/// One "path = value" line per leaf, in document order. Strings are written
/// without quotes, null as "null".
std::string flatten_text(const Json& j);

/// Header plus one row per vector, ';'-separated.
std::string scan_csv(const std::vector<ScanRow>& rows);

/// "name : PASS" lines.
std::string checks_table(const std::vector<ArgumentCheck>& checks);

}  // namespace symquot
