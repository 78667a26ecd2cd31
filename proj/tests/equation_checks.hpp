#pragma once

// Every ir / position update evaluated with the random stream pinned to a
// constant, against values worked out by hand.

#include <cmath>
#include <string>
#include <vector>

#include "codoa/benchmarks.hpp"
#include "codoa/engine.hpp"
#include "swarm_fixtures.hpp"

namespace codoa::test_support {

struct NamedCheck {
    std::string name;
    bool passed;
    std::string detail;
};

inline bool close(double a, double b)
{
    return std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(b));
}

inline std::vector<NamedCheck> pinned_update_checks()
{
    std::vector<NamedCheck> out;
    auto check = [&out](std::string name, double got, double want) {
        out.push_back({std::move(name), close(got, want), "got " + std::to_string(got) + ", want " + std::to_string(want)});
    };
    const AlgorithmParams params;
    const auto every = [](std::size_t, const Particle&) { return true; };

    {
        // pinned 0.5 puts everyone at the box centre; tie goes to particle 0
        const SwarmState s = initialize(params, bench::make_problem("booth", 2), RandomStream::pinned(0.5));
        check("initial reward: ir 0.5 -> 0.75", s.particles[0].ir, 0.75);
        check("initial reward: ex 0 -> 1", s.particles[0].ex, 1);
        check("initial reward: others untouched", s.particles[1].ir, 0.5);
    }
    {
        SwarmState s = swarm_with({3.0, 1.0, 5.0}, 0.5);
        s.particles[1].ir = 0.4;
        reward_best(s, params);
        check("reward after move: best ir 0.4 -> 0.6", s.particles[1].ir, 0.6);
        check("reward after move: best ex +1", s.particles[1].ex, 1);
    }
    {
        SwarmState s = swarm_with({1.0, 3.0}, 0.5);
        socialization(s, params);
        check("socialization: below-mean ir 0.5 -> 0.75", s.particles[0].ir, 0.75);
        check("socialization: above-mean ir unchanged", s.particles[1].ir, 0.5);
        check("socialization: ex +1", s.particles[0].ex, 1);
        check("socialization: ex -1", s.particles[1].ex, -1);
    }
    {
        SwarmState s = swarm_with({1.0}, 0.5, 0.4);
        decay_all_ir(s, params);
        check("decay: ir 0.4 -> 0.2", s.particles[0].ir, 0.2);
    }
    {
        SwarmState s = swarm_with({1.0}, 0.5);
        s.particles[0].position = {1.0};
        s.global_best_position = {3.0};
        move_toward_best(s, params, box_problem(1, -10, 10), every);
        check("move: 1 toward 3 with ir 0.5, rand 0.5 -> 1.5", s.particles[0].position[0], 1.5);
    }
    {
        SwarmState s = swarm_with({1.0, 2.0, 3.0}, 0.5, 1.0);
        s.particles[0].ex = 4;
        s.particles[1].ex = 3;
        s.particles[2].ex = -1;
        grow_immature_ir(s, params);
        check("maturation growth: ex 4 > ml untouched", s.particles[0].ir, 1.0);
        check("maturation growth: ex 3 = ml grows to 1.5", s.particles[1].ir, 1.5);
        check("maturation growth: ex -1 grows to 1.5", s.particles[2].ir, 1.5);
    }
    {
        SwarmState s = swarm_with({2.0, 1.0}, 0.5, 1.0, 10);
        maturation(s, params);
        check("maturation reward: best ir 1 -> 1.5", s.particles[1].ir, 1.5);
        check("maturation reward: best ex 10 -> 11", s.particles[1].ex, 11);
    }
    {
        AlgorithmParams p = params;
        p.rationality_rate = 0;
        SwarmState s = swarm_with({1.0, 2.0}, 0.5);
        s.particles[0].ir = 2.0;
        s.particles[1].ir = 0.5;
        s.particles[1].ex = -1;
        s.particles[1].position = {4.0};
        s.global_best_position = {0.0};
        rationalizing(s, p, box_problem(1, -10, 10));
        check("rationalizing ex<0: ir 0.5 + 0.5 * (2 / 0.5) = 2.5", s.particles[1].ir, 2.5);
        check("rationalizing ex<0: move 4 + 0.5 * 2.5 * (0 - 4) = -1", s.particles[1].position[0], -1.0);
    }
    {
        AlgorithmParams p = params;
        p.rationality_rate = 2;
        SwarmState s = swarm_with({1.0}, 1.0, 1.0);
        s.global_best_position = {0.0};
        rationalizing(s, p, box_problem(1, -10, 10));
        check("rationalizing ex>=0, r=2: 1 -> 2 -> 2.5", s.particles[0].ir, 2.5);
    }
    {
        SwarmState s = swarm_with({3.0, 1.0}, 0.5, 0.8);
        balancing(s, params, box_problem(1, -10, 10));
        check("balancing decay: ir 0.8 -> 0.4", s.particles[0].ir, 0.4);
        check("balancing reward: best ir 0.4 -> 0.6", s.particles[1].ir, 0.6);
    }

    // rand = 0: growth and reward are fixed points, decay hits the floor, moves stay put
    {
        SwarmState s = swarm_with({1.0, 3.0}, 0.0, 0.7, 0);
        socialization(s, params);
        check("rand 0: socialization growth is identity", s.particles[0].ir, 0.7);
        reward_best(s, params);
        check("rand 0: reward is identity", s.particles[0].ir, 0.7);
        grow_immature_ir(s, params);
        check("rand 0: maturation growth is identity", s.particles[1].ir, 0.7);
        s.global_best_position = {5.0};
        s.particles[1].position = {-3.0};
        move_toward_best(s, params, box_problem(1, -10, 10), every);
        check("rand 0: move leaves position", s.particles[1].position[0], -3.0);
        s.particles[1].ex = -1;
        rationalizing(s, params, box_problem(1, -10, 10));
        check("rand 0: rationalizing leaves ir", s.particles[1].ir, 0.7);
        check("rand 0: rationalizing move leaves position", s.particles[1].position[0], -3.0);
        decay_all_ir(s, params);
        check("rand 0: decay pins ir to floor", s.particles[0].ir, params.ir_floor);
    }
    return out;
}

}  // namespace codoa::test_support
