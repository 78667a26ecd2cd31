#include "codoa/cli.hpp"

#include <cstdio>
#include <limits>
#include <ostream>
#include <vector>

#include <CLI11.hpp>

#include "codoa/benchmarks.hpp"
#include "codoa/config_file.hpp"
#include "codoa/errors.hpp"
#include "codoa/report.hpp"

namespace codoa::cli {

namespace {

struct Overrides {
    std::optional<std::string> function;
    std::optional<std::size_t> dims;
    std::optional<std::size_t> particles;
    std::optional<std::size_t> iterations;
    std::optional<std::size_t> runs;
    std::optional<std::uint64_t> seed;
    std::optional<double> ir0;
    std::optional<double> max_ir;
    std::optional<int> ml;
    std::optional<int> rationality;
    std::optional<std::string> format;
    std::optional<std::string> out;
    std::optional<std::size_t> threads;
    std::optional<std::string> config;
};

void add_common_flags(CLI::App& sub, Overrides& o)
{
    constexpr auto big = std::numeric_limits<std::size_t>::max();
    sub.add_option("--particles", o.particles, "number of particles")->check(CLI::Range(std::size_t{2}, big));
    sub.add_option("--iterations", o.iterations, "iteration budget");
    sub.add_option("--runs", o.runs, "independent runs per entry")->check(CLI::Range(std::size_t{1}, big));
    sub.add_option("--seed", o.seed, "base seed; run k uses seed + k");
    sub.add_option("--ir0", o.ir0, "initial interactivity rate")->check(CLI::PositiveNumber);
    sub.add_option("--max-ir", o.max_ir, "upper limit of the interactivity rate")->check(CLI::PositiveNumber);
    sub.add_option("--ml", o.ml, "maturity limit");
    sub.add_option("--rationality", o.rationality, "rationality rate")->check(CLI::NonNegativeNumber);
    sub.add_option("--format", o.format, "report format")->check(CLI::IsMember({"csv", "json"}));
    sub.add_option("--out", o.out, "report destination file");
    sub.add_option("--threads", o.threads, "worker threads")->check(CLI::Range(std::size_t{1}, std::size_t{1024}));
}

void apply(const Overrides& o, CliInvocation& inv)
{
    ExperimentConfig& c = inv.config;
    AlgorithmParams& p = c.params;
    if (o.particles)
        p.num_particles = *o.particles;
    if (o.iterations)
        p.max_iterations = *o.iterations;
    if (o.runs)
        c.runs_per_entry = *o.runs;
    if (o.seed)
        c.base_seed = *o.seed;
    if (o.ir0)
        p.initial_ir = *o.ir0;
    if (o.max_ir)
        p.max_ir = *o.max_ir;
    if (o.ml)
        p.maturity_limit = *o.ml;
    if (o.rationality)
        p.rationality_rate = *o.rationality;
    if (o.format) {
        c.output_format = *o.format == "json" ? ReportFormat::json : ReportFormat::csv;
        inv.format_given = true;
    }
    if (o.out)
        c.output_path = *o.out;
    if (o.threads)
        c.threads = *o.threads;

    try {
        p.validate();
    } catch (const ConfigError& e) {
        throw UsageError(std::string("--ir0/--max-ir/--particles: ") + e.what());
    }
}

// writes the machine report when requested, the human summary otherwise
void emit(const CliInvocation& inv, const ExperimentReport& report, const std::string& summary, std::ostream& out)
{
    const ExperimentConfig& c = inv.config;
    if (c.output_path) {
        write_report(report, c.output_format, c.output_path, out);
        out << "wrote " << report.entries.size() << " entries to " << *c.output_path << '\n';
    } else if (inv.format_given) {
        write_report(report, c.output_format, std::nullopt, out);
    } else {
        out << summary;
    }
}

}  // namespace

CliInvocation parse_args(std::span<const std::string> args)
{
    CLI::App app{"Cognitive development swarm optimizer", "codoa"};
    app.require_subcommand(0, 1);
    Overrides o;

    CLI::App* run = app.add_subcommand("run", "optimize one benchmark function");
    run->add_option("--function", o.function, "benchmark name (see 'list')")->required();
    run->add_option("--dims", o.dims, "problem dimension")->check(CLI::PositiveNumber);
    add_common_flags(*run, o);

    CLI::App* table2 = app.add_subcommand("table2", "reproduce the benchmark results grid");
    add_common_flags(*table2, o);
    table2->add_option("--config", o.config, "experiment configuration file");

    CLI::App* list = app.add_subcommand("list", "list benchmark functions");

    std::vector<const char*> argv{"codoa"};
    for (const std::string& a : args)
        argv.push_back(a.c_str());

    CliInvocation inv;
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        inv.subcommand = Subcommand::help;
        inv.help_text = app.help();
        return inv;
    } catch (const CLI::CallForAllHelp&) {
        inv.subcommand = Subcommand::help;
        inv.help_text = app.help("", CLI::AppFormatMode::All);
        return inv;
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    if (run->parsed()) {
        inv.subcommand = Subcommand::run;
        const std::string& name = *o.function;
        const bench::BenchmarkSpec* spec = bench::find_benchmark(name);
        if (!spec)
            throw UsageError("--function: unknown benchmark '" + name + "'");
        const std::size_t dim = o.dims.value_or(spec->fixed_dimension.value_or(2));
        if (!spec->accepts_dimension(dim))
            throw UsageError("--dims: " + spec->name + " does not accept dimension " + std::to_string(dim));
        inv.config = table2_grid();
        inv.config.entries = {{spec->name, dim}};
        apply(o, inv);
    } else if (table2->parsed()) {
        inv.subcommand = Subcommand::table2;
        inv.config = table2_grid();
        if (o.config) {
            inv.config_path = o.config;
            try {
                inv.config = load_config(*o.config);
            } catch (const ConfigError& e) {
                throw UsageError("--config " + *o.config + ": " + e.what());
            } catch (const IoError& e) {
                throw UsageError(std::string("--config: ") + e.what());
            }
        }
        apply(o, inv);
    } else if (list->parsed()) {
        inv.subcommand = Subcommand::list;
    } else {
        inv.subcommand = Subcommand::help;
        inv.help_text = app.help();
    }
    return inv;
}

int cmd_run(const CliInvocation& invocation, std::ostream& out, std::ostream& err)
{
    try {
        const ExperimentReport report = run_experiment(invocation.config);
        std::string summary = render_summary(report);
        const EntryReport& e = report.entries.front();
        summary += "best position:";
        for (double v : e.best_position) {
            char buf[32];
            std::snprintf(buf, sizeof buf, " %.10g", v);
            summary += buf;
        }
        summary += '\n';
        emit(invocation, report, summary, out);
        return 0;
    } catch (const std::exception& e) {
        err << "codoa run: " << e.what() << '\n';
        return 1;
    }
}

int cmd_table2(const CliInvocation& invocation, std::ostream& out, std::ostream& err)
{
    try {
        const ExperimentReport report = run_experiment(invocation.config);
        emit(invocation, report, render_table2(report) + '\n' + render_summary(report), out);
        return 0;
    } catch (const std::exception& e) {
        err << "codoa table2: " << e.what() << '\n';
        return 1;
    }
}

int cmd_list(const CliInvocation&, std::ostream& out, std::ostream&)
{
    char buf[160];
    std::snprintf(buf, sizeof buf, "%-18s %-10s %-26s %-12s %s\n", "name", "dimension", "domain", "minimum",
                  "minimizer");
    out << buf;
    for (const bench::BenchmarkSpec& s : bench::registry()) {
        std::string dims = s.fixed_dimension ? std::to_string(*s.fixed_dimension)
                                             : ">=" + std::to_string(s.min_dimension == 1 ? 2 : s.min_dimension);
        std::string domain;
        for (std::size_t d = 0; d < s.domain.size(); ++d) {
            std::snprintf(buf, sizeof buf, "%s[%g, %g]", d ? " x " : "", s.domain[d].lower, s.domain[d].upper);
            domain += buf;
        }
        if (!s.fixed_dimension)
            domain += "^n";
        std::string at;
        for (std::size_t d = 0; d < s.known_minimizer.size(); ++d) {
            std::snprintf(buf, sizeof buf, "%s%g", d ? ", " : "", s.known_minimizer[d]);
            at += buf;
        }
        at = s.fixed_dimension ? "(" + at + ")" : "(" + at + ", ..., " + at + ")";
        std::snprintf(buf, sizeof buf, "%-18s %-10s %-26s %-12g %s\n", s.name.c_str(), dims.c_str(),
                      domain.c_str(), s.known_minimum_value, at.c_str());
        out << buf;
    }
    return 0;
}

int main_entry(std::span<const std::string> args, std::ostream& out, std::ostream& err)
{
    CliInvocation inv;
    try {
        inv = parse_args(args);
    } catch (const UsageError& e) {
        err << "codoa: " << e.what() << "\nrun 'codoa --help' for usage\n";
        return 1;
    }
    switch (inv.subcommand) {
    case Subcommand::run:
        return cmd_run(inv, out, err);
    case Subcommand::table2:
        return cmd_table2(inv, out, err);
    case Subcommand::list:
        return cmd_list(inv, out, err);
    case Subcommand::help:
        break;
    }
    out << inv.help_text;
    return 0;
}

}  // namespace codoa::cli
