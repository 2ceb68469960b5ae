#pragma once

// Deterministic report rendering: plain text and a versioned JSON document.
// Identical inputs give identical bytes, so both forms are golden-testable.
// All values are exact; rationals appear as strings inside polynomial text,
// codimensions as integers or "infinite".

#include "germlink/invariants.hpp"
#include "germlink/membrane.hpp"

#include <string>
#include <vector>

namespace germlink {

inline constexpr int report_schema = 1;
inline constexpr const char* tool_name = "germlink";
inline constexpr const char* tool_version = "0.1.0";

enum class ReportFormat { text, json };

// the full invariant report
std::string serialize_report(const InvariantReport& r, ReportFormat fmt,
                             const std::string& name, const std::string& provenance);

// the condensed finite-determinacy view
std::string serialize_check(const InvariantReport& r, ReportFormat fmt,
                            const std::string& name, const std::string& provenance);

// the presentation matrix with the first three Fitting ideals; requires
// r.presentation
std::string serialize_presentation(const InvariantReport& r, ReportFormat fmt,
                                   const std::string& name, const std::string& provenance);

// the truncation oracle section
std::string serialize_oracle(const InvariantReport& r, ReportFormat fmt,
                             const std::string& name, const std::string& provenance);

std::string serialize_tables(const std::vector<SignTable>& tables, ReportFormat fmt);

std::string serialize_catalog(ReportFormat fmt);

} // namespace germlink
