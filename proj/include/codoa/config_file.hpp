#pragma once

#include <string>
#include <string_view>

#include "codoa/harness.hpp"

namespace codoa {

// Experiment configuration as flat "key = value" lines; '#' starts a comment.
//
//   entry = sphere 30        (repeatable; replaces the base entries when present)
//   runs = 10
//   base_seed = 1
//   particles = 50
//   iterations = 5000
//   ir0 = 0.5
//   max_ir = 10
//   min_ir = 0
//   ir_floor = 1e-6
//   ml = 3
//   rationality = 2
//   initial_ex = 0
//   rand = per-dimension     (or per-particle)
//   format = csv             (or json)
//   output = results.csv
//   threads = 1
//
// Unknown keys, repeated scalar keys and unparsable values throw ConfigError
// with the line number.
ExperimentConfig parse_config(std::string_view text, ExperimentConfig base = table2_grid());

/// Reads and parses a file. Throws IoError when it cannot be opened.
ExperimentConfig load_config(const std::string& path, ExperimentConfig base = table2_grid());

}  // namespace codoa
