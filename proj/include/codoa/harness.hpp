#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "codoa/engine.hpp"

namespace codoa {

enum class ReportFormat { csv, json };

struct ExperimentEntry {
    std::string function;
    std::size_t dimension = 2;

    bool operator==(const ExperimentEntry&) const = default;
};

struct ExperimentConfig {
    std::vector<ExperimentEntry> entries;
    std::size_t runs_per_entry = 10;
    // run k of every entry uses base_seed + k
    std::uint64_t base_seed = 1;
    AlgorithmParams params;
    ReportFormat output_format = ReportFormat::csv;
    std::optional<std::string> output_path;  // empty: standard output
    std::size_t threads = 1;

    /// Checks every entry against the benchmark registry and the parameters.
    void validate() const;
};

struct RunStatistics {
    double best = 0.0;
    double worst = 0.0;
    double mean = 0.0;
    double median = 0.0;
    double stddev = 0.0;  // sample (n - 1) denominator, 0 for a single run
    std::vector<double> run_best;
    std::vector<std::uint64_t> seeds;

    bool operator==(const RunStatistics&) const = default;
};

struct EntryReport {
    ExperimentEntry entry;
    RunStatistics stats;
    std::optional<double> known_minimum;
    std::optional<double> abs_error;  // |best - known_minimum|
    std::vector<double> best_position;

    bool operator==(const EntryReport&) const = default;
};

struct ExperimentReport {
    AlgorithmParams params;
    std::uint64_t base_seed = 1;
    std::size_t runs_per_entry = 0;
    std::vector<EntryReport> entries;

    bool operator==(const ExperimentReport&) const = default;
};

/// Throws InputError on an empty sample.
RunStatistics compute_statistics(std::span<const double> run_best, std::span<const std::uint64_t> seeds);

/// Throws ConfigError before any run starts if the configuration is invalid.
ExperimentReport run_experiment(const ExperimentConfig& config);

/// The published grid: five 2-D functions plus sphere and rosenbrock at
/// 2, 5, 10, 20 and 30 dimensions, with the published run settings.
ExperimentConfig table2_grid();

}  // namespace codoa
