#pragma once

#include "kirwan/genus4.hpp"

#include "json.hpp"

#include <string>

namespace kirwan {

// Renderings of the pipeline report. The JSON form is the machine-readable
// map; markdown carries the human-readable tables. Both are deterministic.
nlohmann::json report_to_json(const PipelineReport& report);
std::string report_to_markdown(const PipelineReport& report);

// Strata-only rendering for the stratification subcommand.
nlohmann::json strata_to_json(const StrataResult& strata, int truncate);
std::string strata_to_markdown(const StrataResult& strata, int truncate);

// One line per golden check; "PASS name" or "FAIL name: diff".
std::string golden_summary(const std::vector<CheckResult>& checks);

} // namespace kirwan
