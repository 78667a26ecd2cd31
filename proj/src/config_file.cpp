#include "codoa/config_file.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "codoa/errors.hpp"

namespace codoa {

namespace {

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

template <typename T>
T parse_number(std::string_view value, const std::string& where)
{
    T out{};
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc() || ptr != value.data() + value.size())
        throw ConfigError(where + ": '" + std::string(value) + "' is not a valid number");
    return out;
}

}  // namespace

ExperimentConfig parse_config(std::string_view text, ExperimentConfig base)
{
    ExperimentConfig config = std::move(base);
    std::vector<ExperimentEntry> entries;
    std::set<std::string> seen;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto end = std::min(text.find('\n', pos), text.size());
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;

        const std::string where = "line " + std::to_string(line_no);
        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError(where + ": expected 'key = value'");
        const std::string key(trim(line.substr(0, eq)));
        const std::string_view value = trim(line.substr(eq + 1));
        const std::string at = where + " (" + key + ")";
        if (value.empty())
            throw ConfigError(at + ": missing value");

        if (key == "entry") {
            const auto space = value.find_first_of(" \t");
            if (space == std::string_view::npos)
                throw ConfigError(at + ": expected '<function> <dimension>'");
            entries.push_back({std::string(value.substr(0, space)),
                               parse_number<std::size_t>(trim(value.substr(space)), at)});
            continue;
        }
        if (!seen.insert(key).second)
            throw ConfigError(at + ": key given twice");

        AlgorithmParams& p = config.params;
        if (key == "runs")
            config.runs_per_entry = parse_number<std::size_t>(value, at);
        else if (key == "base_seed")
            config.base_seed = parse_number<std::uint64_t>(value, at);
        else if (key == "particles")
            p.num_particles = parse_number<std::size_t>(value, at);
        else if (key == "iterations")
            p.max_iterations = parse_number<std::size_t>(value, at);
        else if (key == "ir0")
            p.initial_ir = parse_number<double>(value, at);
        else if (key == "max_ir")
            p.max_ir = parse_number<double>(value, at);
        else if (key == "min_ir")
            p.min_ir = parse_number<double>(value, at);
        else if (key == "ir_floor")
            p.ir_floor = parse_number<double>(value, at);
        else if (key == "ml")
            p.maturity_limit = parse_number<int>(value, at);
        else if (key == "rationality")
            p.rationality_rate = parse_number<int>(value, at);
        else if (key == "initial_ex")
            p.initial_ex = parse_number<int>(value, at);
        else if (key == "rand") {
            if (value == "per-dimension")
                p.per_dimension_rand = true;
            else if (value == "per-particle")
                p.per_dimension_rand = false;
            else
                throw ConfigError(at + ": expected per-dimension or per-particle");
        } else if (key == "format") {
            if (value == "csv")
                config.output_format = ReportFormat::csv;
            else if (value == "json")
                config.output_format = ReportFormat::json;
            else
                throw ConfigError(at + ": expected csv or json");
        } else if (key == "output")
            config.output_path = std::string(value);
        else if (key == "threads")
            config.threads = parse_number<std::size_t>(value, at);
        else
            throw ConfigError(where + ": unknown key '" + key + "'");
    }

    if (!entries.empty())
        config.entries = std::move(entries);
    config.validate();
    return config;
}

ExperimentConfig load_config(const std::string& path, ExperimentConfig base)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError(path, "cannot open configuration file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str(), std::move(base));
}

}  // namespace codoa
