#include "codoa/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "codoa/benchmarks.hpp"
#include "codoa/errors.hpp"

namespace codoa {

void ExperimentConfig::validate() const
{
    if (entries.empty())
        throw ConfigError("entries: at least one (function, dimension) pair is required");
    if (runs_per_entry == 0)
        throw ConfigError("runs_per_entry must be positive");
    if (threads == 0)
        throw ConfigError("threads must be positive");
    params.validate();
    for (const ExperimentEntry& e : entries)
        bench::make_problem(e.function, e.dimension);
}

RunStatistics compute_statistics(std::span<const double> run_best, std::span<const std::uint64_t> seeds)
{
    if (run_best.empty())
        throw InputError("statistics of an empty sample");
    RunStatistics s;
    s.run_best.assign(run_best.begin(), run_best.end());
    s.seeds.assign(seeds.begin(), seeds.end());

    std::vector<double> sorted = s.run_best;
    std::sort(sorted.begin(), sorted.end());
    const std::size_t n = sorted.size();
    s.best = sorted.front();
    s.worst = sorted.back();
    s.median = n % 2 == 1 ? sorted[n / 2] : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);

    double sum = 0.0;
    for (double v : s.run_best)
        sum += v;
    s.mean = sum / static_cast<double>(n);
    if (n > 1) {
        double ss = 0.0;
        for (double v : s.run_best)
            ss += (v - s.mean) * (v - s.mean);
        s.stddev = std::sqrt(ss / static_cast<double>(n - 1));
    }
    return s;
}

ExperimentReport run_experiment(const ExperimentConfig& config)
{
    config.validate();

    std::vector<ObjectiveProblem> problems;
    problems.reserve(config.entries.size());
    for (const ExperimentEntry& e : config.entries)
        problems.push_back(bench::make_problem(e.function, e.dimension));

    const std::size_t runs = config.runs_per_entry;
    const std::size_t total = problems.size() * runs;
    std::vector<RunResult> results(total);

    // each job writes its own slot; ordering is by (entry, run) regardless of schedule
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t job = next++; job < total; job = next++) {
            try {
                const std::size_t entry = job / runs;
                const std::uint64_t seed = config.base_seed + job % runs;
                results[job] = run(config.params, problems[entry], seed);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
            }
        }
    };
    const std::size_t workers = std::min(config.threads, total);
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t t = 0; t < workers; ++t)
            pool.emplace_back(worker);
    }
    if (failure)
        std::rethrow_exception(failure);

    ExperimentReport report;
    report.params = config.params;
    report.base_seed = config.base_seed;
    report.runs_per_entry = runs;
    for (std::size_t e = 0; e < problems.size(); ++e) {
        std::vector<double> bests(runs);
        std::vector<std::uint64_t> seeds(runs);
        std::size_t best_run = 0;
        for (std::size_t k = 0; k < runs; ++k) {
            const RunResult& r = results[e * runs + k];
            bests[k] = r.best_fitness;
            seeds[k] = r.seed;
            if (r.best_fitness < results[e * runs + best_run].best_fitness)
                best_run = k;
        }
        EntryReport er;
        er.entry = config.entries[e];
        er.stats = compute_statistics(bests, seeds);
        er.known_minimum = problems[e].known_minimum_value;
        if (er.known_minimum)
            er.abs_error = std::abs(er.stats.best - *er.known_minimum);
        er.best_position = results[e * runs + best_run].best_position;
        report.entries.push_back(std::move(er));
    }
    return report;
}

ExperimentConfig table2_grid()
{
    ExperimentConfig config;
    for (const char* name : {"booth", "beale", "goldstein_price", "mccormick", "three_hump_camel"})
        config.entries.push_back({name, 2});
    for (const char* name : {"sphere", "rosenbrock"}) {
        for (std::size_t d : {2, 5, 10, 20, 30})
            config.entries.push_back({name, d});
    }
    config.params = AlgorithmParams{};
    config.params.num_particles = 50;
    config.params.max_iterations = 5000;
    config.params.initial_ir = 0.5;
    config.params.max_ir = 10.0;
    config.params.maturity_limit = 3;
    config.params.rationality_rate = 2;
    return config;
}

}  // namespace codoa
