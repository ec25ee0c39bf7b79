#pragma once

#include <nlohmann/json.hpp>

#include <string>

#include "fcensus/census.hpp"

namespace fcensus {

inline constexpr const char* kReportSchemaVersion = "1";

/// Counts are decimal strings; strata arrays are sorted by canonical key.
/// Timing is deliberately left out so equal censuses serialize identically.
nlohmann::ordered_json report_to_json(const CensusReport& report);

/// One row per class count and per stratum:
///   section,key,count,count_eig
std::string report_to_csv(const CensusReport& report);

}  // namespace fcensus
