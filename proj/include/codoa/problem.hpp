#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace codoa {

using Objective = std::function<double(std::span<const double>)>;

/// A box-constrained minimization problem.
struct ObjectiveProblem {
    std::string name;
    std::vector<double> lower_bounds;
    std::vector<double> upper_bounds;
    Objective evaluator;
    std::optional<double> known_minimum_value;
    std::optional<std::vector<double>> known_minimizer;
    // how closely evaluator(known_minimizer) must match known_minimum_value
    double optimum_tolerance = 1e-9;

    std::size_t dimension() const noexcept { return lower_bounds.size(); }

    double evaluate(std::span<const double> x) const { return evaluator(x); }

    /// Throws ConfigError when bounds are inconsistent, the evaluator is
    /// missing, or the attached optimum does not evaluate to its value.
    void validate() const;
};

/// Wraps `problem` so that minimizing the result maximizes the original.
ObjectiveProblem negated(ObjectiveProblem problem);

}  // namespace codoa
