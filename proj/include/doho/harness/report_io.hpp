#pragma once

#include <string>

#include "json.hpp"

#include "doho/harness/experiment.hpp"

namespace doho {

/// {"version", "spec", "aggregates": {...}, "records": [...]}.
nlohmann::json report_to_json(const ExperimentReport& report);
/// Inverse of report_to_json (aggregates are recomputed, not read).
ExperimentReport report_from_json(const nlohmann::json& j);

/// Header "trial,seed,verdict,samples,queries", one row per trial.
std::string report_to_csv(const ExperimentReport& report);

/// Renders as "json" (indented, trailing newline) or "csv".
std::string render_report(const ExperimentReport& report, const std::string& format);

}  // namespace doho
