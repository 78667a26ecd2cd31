#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "codoa/harness.hpp"

namespace codoa {

// Column order of the CSV report.
inline constexpr std::string_view kCsvHeader =
    "function,dimension,runs,best,worst,mean,median,stddev,known_minimum,abs_error,base_seed";

std::string format_csv(const ExperimentReport& report);
std::string format_json(const ExperimentReport& report);

/// Inverse of format_json. Throws InputError on malformed documents.
ExperimentReport parse_report_json(std::string_view text);

/// Writes to `destination`, or to `out` when no destination is given.
/// Throws IoError carrying the path when the file cannot be written.
void write_report(const ExperimentReport& report, ReportFormat format,
                  const std::optional<std::string>& destination, std::ostream& out);

/// One line echoing every algorithm parameter.
std::string describe_params(const AlgorithmParams& params);

/// Human-readable per-entry statistics.
std::string render_summary(const ExperimentReport& report);

/// Best values laid out as function rows by dimension columns (2, 5, 10, 20,
/// 30); cells without an entry print "x".
std::string render_table2(const ExperimentReport& report);

}  // namespace codoa
