#pragma once

#include "convchain/json_writer.hpp"
#include "convchain/simulator.hpp"

#include <string>

namespace convchain {

/// Appends the summary as a JSON object to an open writer position.
void write_summary(JsonWriter& jw, const SimSummary& summary);

/// Appends the comparison report as a JSON object.
void write_report(JsonWriter& jw, const CompareReport& report);

std::string summary_to_json(const SimSummary& summary);
std::string report_to_json(const CompareReport& report);

}  // namespace convchain
