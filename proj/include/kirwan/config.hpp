#pragma once

#include "kirwan/genus4.hpp"

#include "json.hpp"

#include <string>

namespace kirwan {

// Schema-validated configuration ingestion; unknown fields are rejected.
// Custom group definitions in the file are added to the catalog before the
// centers are resolved. Throws ConfigError on any violation.
PipelineConfig parse_config(const nlohmann::json& j, GroupCatalog& catalog);

PipelineConfig load_config_file(const std::string& path,
                                GroupCatalog& catalog);

// Canonical serialization (sorted keys, "p/q" rationals); re-ingesting the
// output reproduces the configuration exactly.
nlohmann::json config_to_json(const PipelineConfig& config);

} // namespace kirwan
