#pragma once

#include <strongdom/claims.hpp>

#include <string>
#include <vector>

namespace strongdom
{
    /// Wall-clock timings vary between runs, so by default every `ms` field
    /// is written as 0 and the report depends only on the arguments and seed.
    struct ReportOptions
    {
        bool include_timings = false;
    };

    /// Array of {id, params, expected, computed, status, ms}, two-space indent.
    auto report_json(const std::vector<ClaimResult> & results, const ReportOptions & options = {}) -> std::string;

    /// Header row then one row per result, same columns as the JSON report.
    /// params are joined with ';'. Fields holding ',', '"' or newlines are quoted.
    auto report_csv(const std::vector<ClaimResult> & results, const ReportOptions & options = {}) -> std::string;

    /// Aligned human-readable table.
    auto report_text(const std::vector<ClaimResult> & results, const ReportOptions & options = {}) -> std::string;
}
