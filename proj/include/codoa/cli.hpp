#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>

#include "codoa/harness.hpp"

namespace codoa::cli {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Subcommand { run, table2, list, help };

struct CliInvocation {
    Subcommand subcommand = Subcommand::help;
    ExperimentConfig config;
    // an explicit --format sends the machine-readable report to stdout
    bool format_given = false;
    std::optional<std::string> config_path;
    std::string help_text;
};

/// `args` excludes the program name. Throws UsageError naming the flag.
CliInvocation parse_args(std::span<const std::string> args);

int cmd_run(const CliInvocation& invocation, std::ostream& out, std::ostream& err);
int cmd_table2(const CliInvocation& invocation, std::ostream& out, std::ostream& err);
int cmd_list(const CliInvocation& invocation, std::ostream& out, std::ostream& err);

/// Parses and dispatches; returns the process exit code.
int main_entry(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace codoa::cli
