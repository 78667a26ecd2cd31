#include "codoa/problem.hpp"

#include <cmath>

#include "codoa/errors.hpp"

namespace codoa {

void ObjectiveProblem::validate() const
{
    const std::string who = name.empty() ? std::string("problem") : name;
    if (lower_bounds.empty())
        throw ConfigError(who + ": dimension must be positive");
    if (lower_bounds.size() != upper_bounds.size())
        throw ConfigError(who + ": lower_bounds and upper_bounds differ in length");
    for (std::size_t d = 0; d < lower_bounds.size(); ++d) {
        if (!(lower_bounds[d] < upper_bounds[d]))
            throw ConfigError(who + ": lower_bounds[" + std::to_string(d) + "] must be below upper_bounds");
    }
    if (!evaluator)
        throw ConfigError(who + ": evaluator is not set");
    if (known_minimizer) {
        if (known_minimizer->size() != dimension())
            throw ConfigError(who + ": known_minimizer has wrong dimension");
        if (!known_minimum_value)
            throw ConfigError(who + ": known_minimizer given without known_minimum_value");
        const double at = evaluator(*known_minimizer);
        if (!(std::abs(at - *known_minimum_value) <= optimum_tolerance))
            throw ConfigError(who + ": evaluator(known_minimizer) disagrees with known_minimum_value");
    }
}

ObjectiveProblem negated(ObjectiveProblem problem)
{
    Objective inner = std::move(problem.evaluator);
    problem.evaluator = [inner](std::span<const double> x) { return -inner(x); };
    problem.name = "-" + problem.name;
    if (problem.known_minimum_value) {
        // a maximizer of f is a minimizer of -f only if the optimum is known to be a maximum
        problem.known_minimum_value.reset();
        problem.known_minimizer.reset();
    }
    return problem;
}

}  // namespace codoa
