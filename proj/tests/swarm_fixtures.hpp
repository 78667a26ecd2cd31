#pragma once

#include <span>
#include <vector>

#include "codoa/engine.hpp"
#include "codoa/problem.hpp"

namespace codoa::test_support {

// Swarm with the given cached fitnesses, all caches valid, on a pinned stream.
inline SwarmState swarm_with(std::vector<double> fitness, double pinned_rand, double ir = 0.5, int ex = 0)
{
    SwarmState s;
    s.rng = RandomStream::pinned(pinned_rand);
    for (double f : fitness) {
        Particle p;
        p.position = {0.0};
        p.fitness = f;
        p.ir = ir;
        p.ex = ex;
        p.fitness_valid = true;
        s.particles.push_back(p);
    }
    return s;
}

inline ObjectiveProblem box_problem(std::size_t dim, double lo, double hi)
{
    ObjectiveProblem p;
    p.name = "box";
    p.lower_bounds.assign(dim, lo);
    p.upper_bounds.assign(dim, hi);
    p.evaluator = [](std::span<const double> x) {
        double s = 0.0;
        for (double v : x)
            s += v * v;
        return s;
    };
    return p;
}

}  // namespace codoa::test_support
