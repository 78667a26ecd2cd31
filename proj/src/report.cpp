#include "codoa/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>

#include <json.hpp>

#include "codoa/benchmarks.hpp"
#include "codoa/errors.hpp"

namespace codoa {

namespace {

using nlohmann::json;

std::string num(double v)
{
    if (std::isnan(v))
        return "nan";
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

std::string opt_num(const std::optional<double>& v)
{
    return v ? num(*v) : std::string();
}

json real(double v)
{
    return std::isfinite(v) ? json(v) : json(nullptr);
}

double real_from(const json& j)
{
    return j.is_null() ? std::numeric_limits<double>::infinity() : j.get<double>();
}

json params_json(const AlgorithmParams& p)
{
    return {{"num_particles", p.num_particles},
            {"max_iterations", p.max_iterations},
            {"initial_ir", p.initial_ir},
            {"max_ir", p.max_ir},
            {"min_ir", p.min_ir},
            {"ir_floor", p.ir_floor},
            {"maturity_limit", p.maturity_limit},
            {"rationality_rate", p.rationality_rate},
            {"initial_ex", p.initial_ex},
            {"per_dimension_rand", p.per_dimension_rand}};
}

AlgorithmParams params_from(const json& j)
{
    AlgorithmParams p;
    p.num_particles = j.at("num_particles").get<std::size_t>();
    p.max_iterations = j.at("max_iterations").get<std::size_t>();
    p.initial_ir = j.at("initial_ir").get<double>();
    p.max_ir = j.at("max_ir").get<double>();
    p.min_ir = j.at("min_ir").get<double>();
    p.ir_floor = j.at("ir_floor").get<double>();
    p.maturity_limit = j.at("maturity_limit").get<int>();
    p.rationality_rate = j.at("rationality_rate").get<int>();
    p.initial_ex = j.at("initial_ex").get<int>();
    p.per_dimension_rand = j.at("per_dimension_rand").get<bool>();
    return p;
}

}  // namespace

std::string format_csv(const ExperimentReport& report)
{
    std::string out(kCsvHeader);
    out += '\n';
    for (const EntryReport& e : report.entries) {
        const RunStatistics& s = e.stats;
        out += e.entry.function + ',' + std::to_string(e.entry.dimension) + ',' + std::to_string(s.run_best.size()) +
               ',' + num(s.best) + ',' + num(s.worst) + ',' + num(s.mean) + ',' + num(s.median) + ',' +
               num(s.stddev) + ',' + opt_num(e.known_minimum) + ',' + opt_num(e.abs_error) + ',' +
               std::to_string(report.base_seed) + '\n';
    }
    return out;
}

std::string format_json(const ExperimentReport& report)
{
    json entries = json::array();
    for (const EntryReport& e : report.entries) {
        const RunStatistics& s = e.stats;
        json run_best = json::array();
        for (double v : s.run_best)
            run_best.push_back(real(v));
        entries.push_back({{"function", e.entry.function},
                           {"dimension", e.entry.dimension},
                           {"runs", s.run_best.size()},
                           {"best", real(s.best)},
                           {"worst", real(s.worst)},
                           {"mean", real(s.mean)},
                           {"median", real(s.median)},
                           {"stddev", real(s.stddev)},
                           {"known_minimum", e.known_minimum ? json(*e.known_minimum) : json(nullptr)},
                           {"abs_error", e.abs_error ? real(*e.abs_error) : json(nullptr)},
                           {"base_seed", report.base_seed},
                           {"run_best", run_best},
                           {"seeds", s.seeds},
                           {"best_position", e.best_position}});
    }
    json doc = {{"params", params_json(report.params)},
                {"base_seed", report.base_seed},
                {"runs_per_entry", report.runs_per_entry},
                {"stddev_denominator", "n-1"},
                {"entries", entries}};
    return doc.dump(2) + '\n';
}

ExperimentReport parse_report_json(std::string_view text)
{
    try {
        const json doc = json::parse(text);
        ExperimentReport report;
        report.params = params_from(doc.at("params"));
        report.base_seed = doc.at("base_seed").get<std::uint64_t>();
        report.runs_per_entry = doc.at("runs_per_entry").get<std::size_t>();
        for (const json& j : doc.at("entries")) {
            EntryReport e;
            e.entry.function = j.at("function").get<std::string>();
            e.entry.dimension = j.at("dimension").get<std::size_t>();
            e.stats.best = real_from(j.at("best"));
            e.stats.worst = real_from(j.at("worst"));
            e.stats.mean = real_from(j.at("mean"));
            e.stats.median = real_from(j.at("median"));
            e.stats.stddev = real_from(j.at("stddev"));
            for (const json& v : j.at("run_best"))
                e.stats.run_best.push_back(real_from(v));
            e.stats.seeds = j.at("seeds").get<std::vector<std::uint64_t>>();
            if (!j.at("known_minimum").is_null())
                e.known_minimum = j.at("known_minimum").get<double>();
            if (!j.at("abs_error").is_null())
                e.abs_error = j.at("abs_error").get<double>();
            e.best_position = j.at("best_position").get<std::vector<double>>();
            report.entries.push_back(std::move(e));
        }
        return report;
    } catch (const json::exception& ex) {
        throw InputError(std::string("malformed report: ") + ex.what());
    }
}

void write_report(const ExperimentReport& report, ReportFormat format, const std::optional<std::string>& destination,
                  std::ostream& out)
{
    const std::string text = format == ReportFormat::csv ? format_csv(report) : format_json(report);
    if (!destination) {
        out << text;
        return;
    }
    std::ofstream file(*destination, std::ios::binary | std::ios::trunc);
    if (!file)
        throw IoError(*destination, "cannot open for writing");
    file << text;
    file.flush();
    if (!file)
        throw IoError(*destination, "write failed");
}

std::string describe_params(const AlgorithmParams& p)
{
    return "particles=" + std::to_string(p.num_particles) + " iterations=" + std::to_string(p.max_iterations) +
           " ir0=" + num(p.initial_ir) + " max_ir=" + num(p.max_ir) + " min_ir=" + num(p.min_ir) +
           " ir_floor=" + num(p.ir_floor) + " ml=" + std::to_string(p.maturity_limit) +
           " rationality=" + std::to_string(p.rationality_rate) + " initial_ex=" + std::to_string(p.initial_ex) +
           " rand=" + (p.per_dimension_rand ? "per-dimension" : "per-particle");
}

std::string render_summary(const ExperimentReport& report)
{
    std::string out = "params: " + describe_params(report.params) + '\n';
    out += "runs per entry: " + std::to_string(report.runs_per_entry) + ", seeds " +
           std::to_string(report.base_seed) + ".." +
           std::to_string(report.base_seed + report.runs_per_entry - 1) + '\n';
    for (const EntryReport& e : report.entries) {
        const RunStatistics& s = e.stats;
        out += e.entry.function + " d=" + std::to_string(e.entry.dimension) + ": best=" + num(s.best) +
               " worst=" + num(s.worst) + " mean=" + num(s.mean) + " median=" + num(s.median) +
               " stddev=" + num(s.stddev);
        if (e.known_minimum)
            out += " known_minimum=" + num(*e.known_minimum) + " abs_error=" + num(*e.abs_error);
        out += '\n';
    }
    return out;
}

std::string render_table2(const ExperimentReport& report)
{
    static constexpr std::size_t dims[] = {2, 5, 10, 20, 30};
    char buf[64];
    std::string out;
    std::snprintf(buf, sizeof buf, "%-18s", "Function");
    out += buf;
    for (std::size_t d : dims) {
        std::snprintf(buf, sizeof buf, "%12zu", d);
        out += buf;
    }
    out += '\n';
    for (const bench::BenchmarkSpec& spec : bench::registry()) {
        bool any = false;
        std::string row;
        std::snprintf(buf, sizeof buf, "%-18s", spec.display_name.c_str());
        row += buf;
        for (std::size_t d : dims) {
            const EntryReport* cell = nullptr;
            for (const EntryReport& e : report.entries) {
                const bench::BenchmarkSpec* es = bench::find_benchmark(e.entry.function);
                if (es == &spec && e.entry.dimension == d)
                    cell = &e;
            }
            if (cell) {
                any = true;
                std::snprintf(buf, sizeof buf, "%12.4f", cell->stats.best);
            } else {
                std::snprintf(buf, sizeof buf, "%12s", "x");
            }
            row += buf;
        }
        if (any)
            out += row + '\n';
    }
    out += "x: not applicable\n";
    return out;
}

}  // namespace codoa
