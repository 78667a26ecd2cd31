#pragma once

// Randomized short runs replayed phase by phase, with the swarm invariants
// checked at every phase boundary. Shared by the property tests and the
// acceptance binary.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "codoa/benchmarks.hpp"
#include "codoa/engine.hpp"
#include "codoa/random.hpp"

namespace codoa::test_support {

struct RandomCase {
    AlgorithmParams params;
    ObjectiveProblem problem;
    std::uint64_t seed = 0;
};

inline RandomCase generate_case(std::uint64_t case_seed)
{
    RandomStream g(case_seed ^ 0x9e3779b97f4a7c15ULL);
    auto pick = [&g](int lo, int hi) { return lo + static_cast<int>(g.next() * (hi - lo + 1)); };

    RandomCase c;
    AlgorithmParams& p = c.params;
    p.num_particles = static_cast<std::size_t>(pick(2, 30));
    p.max_iterations = static_cast<std::size_t>(pick(1, 40));
    p.initial_ir = 0.05 + 2.0 * g.next();
    p.max_ir = p.initial_ir + 10.0 * g.next();
    p.maturity_limit = pick(-4, 4);
    p.rationality_rate = pick(0, 3);
    p.initial_ex = pick(-2, 2);
    p.per_dimension_rand = g.next() < 0.7;

    const auto specs = bench::registry();
    const bench::BenchmarkSpec& spec = specs[static_cast<std::size_t>(pick(0, static_cast<int>(specs.size()) - 1))];
    const std::size_t dim = spec.fixed_dimension.value_or(static_cast<std::size_t>(pick(2, 10)));
    c.problem = bench::make_problem(spec.name, dim);
    c.seed = case_seed * 7919 + 1;
    return c;
}

class InvariantChecker {
public:
    explicit InvariantChecker(const RandomCase& c, std::string label) : c_(c), label_(std::move(label)) {}

    const std::vector<std::string>& violations() const { return violations_; }

    void expect(bool ok, const std::string& what)
    {
        if (!ok)
            violations_.push_back(label_ + ": " + what);
    }

    void check_boundaries(const SwarmState& s, const std::string& where)
    {
        const AlgorithmParams& p = c_.params;
        for (const Particle& q : s.particles) {
            expect(q.ir >= p.ir_floor && q.ir <= p.max_ir, where + ": ir out of bounds");
            for (std::size_t d = 0; d < q.position.size(); ++d) {
                expect(q.position[d] >= c_.problem.lower_bounds[d] && q.position[d] <= c_.problem.upper_bounds[d],
                       where + ": position outside box");
            }
        }
    }

    // exactly one particle gained exactly one experience point
    void check_single_reward(const std::vector<int>& before, const SwarmState& s, const std::string& where)
    {
        int bumped = 0;
        bool others_same = true;
        for (std::size_t i = 0; i < before.size(); ++i) {
            const int delta = s.particles[i].ex - before[i];
            if (delta == 1)
                ++bumped;
            else if (delta != 0)
                others_same = false;
        }
        expect(bumped == 1 && others_same, where + ": reward did not bump exactly one ex by one");
    }

    void check_archive(const SwarmState& s, const std::string& where)
    {
        double min_fit = s.particles.front().fitness;
        for (const Particle& q : s.particles) {
            expect(q.fitness_valid, where + ": stale cache at iteration boundary");
            min_fit = std::min(min_fit, q.fitness);
        }
        expect(s.global_best_fitness <= min_fit, where + ": archive worse than a particle");
        const double at = c_.problem.evaluate(s.global_best_position);
        expect(std::abs(at - s.global_best_fitness) <= 1e-12 || at == s.global_best_fitness,
               where + ": archive fitness does not match its position");
    }

    void run()
    {
        const AlgorithmParams& p = c_.params;
        SwarmState s = initialize(p, c_.problem, c_.seed);
        expect(s.eval_count == p.num_particles, "initial eval_count != N");
        check_boundaries(s, "initialize");
        check_archive(s, "initialize");

        std::size_t expected_evals = p.num_particles;
        double prev_best = s.global_best_fitness;
        for (std::size_t it = 0; it < p.max_iterations; ++it) {
            const std::string at = "iteration " + std::to_string(it);
            SwarmState reference = s;
            iterate(reference, p, c_.problem);
            const std::size_t evals_before = s.eval_count;

            std::vector<int> ex = ex_of(s);
            double sum = 0;
            for (const Particle& q : s.particles)
                sum += q.fitness;
            const double mean = sum / static_cast<double>(s.particles.size());
            std::size_t below = 0;
            for (const Particle& q : s.particles)
                below += q.fitness < mean ? 1 : 0;
            socialization(s, p);
            std::size_t inc = 0, dec = 0;
            for (std::size_t i = 0; i < ex.size(); ++i) {
                const int delta = s.particles[i].ex - ex[i];
                inc += delta == 1 ? 1 : 0;
                dec += delta == -1 ? 1 : 0;
            }
            expect(inc == below && inc + dec == s.particles.size(), at + ": socialization conservation");
            check_boundaries(s, at + " socialization");

            decay_all_ir(s, p);
            check_boundaries(s, at + " decay");

            const std::size_t holder = s.best_holder;
            const std::vector<double> holder_pos = s.particles[holder].position;
            move_toward_best(s, p, c_.problem, [holder](std::size_t i, const Particle&) { return i != holder; });
            expect(s.particles[holder].position == holder_pos, at + ": best holder moved in the move step");
            check_boundaries(s, at + " move");

            evaluate_swarm(s, c_.problem);
            ex = ex_of(s);
            reward_best(s, p);
            check_single_reward(ex, s, at + " reward");
            check_boundaries(s, at + " reward");

            ex = ex_of(s);
            maturation(s, p);
            check_single_reward(ex, s, at + " maturation");
            check_boundaries(s, at + " maturation");

            rationalizing(s, p, c_.problem);
            check_boundaries(s, at + " rationalizing");

            ex = ex_of(s);
            balancing(s, p, c_.problem);
            check_single_reward(ex, s, at + " balancing");
            check_boundaries(s, at + " balancing");

            ++s.iteration;
            s.best_history.push_back(s.global_best_fitness);
            expect(s == reference, at + ": phase replay diverged from iterate()");

            const std::size_t used = s.eval_count - evals_before;
            expect(used <= 2 * p.num_particles, at + ": more than 2N evaluations");
            expected_evals += used;
            expect(s.global_best_fitness <= prev_best, at + ": archive got worse");
            prev_best = s.global_best_fitness;
            check_archive(s, at);
        }
        expect(s.eval_count == expected_evals, "eval_count accounting");

        const RunResult r = codoa::run(p, c_.problem, c_.seed);
        expect(r.eval_count == s.eval_count, "run() eval_count differs from replay");
        expect(r.best_fitness == s.global_best_fitness, "run() best differs from replay");
        expect(std::is_sorted(r.best_per_iteration.rbegin(), r.best_per_iteration.rend()),
               "best_per_iteration is not non-increasing");
        expect(r.best_per_iteration.empty() || r.best_per_iteration.back() == r.best_fitness,
               "best_fitness differs from last history entry");
    }

private:
    static std::vector<int> ex_of(const SwarmState& s)
    {
        std::vector<int> out;
        for (const Particle& q : s.particles)
            out.push_back(q.ex);
        return out;
    }

    const RandomCase& c_;
    std::string label_;
    std::vector<std::string> violations_;
};

inline std::vector<std::string> check_random_case(std::uint64_t case_seed)
{
    const RandomCase c = generate_case(case_seed);
    InvariantChecker checker(c, "case " + std::to_string(case_seed) + " (" + c.problem.name + " d=" +
                                    std::to_string(c.problem.dimension()) + ")");
    checker.run();
    return checker.violations();
}

}  // namespace codoa::test_support
