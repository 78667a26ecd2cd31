#include "codoa/engine.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "codoa/errors.hpp"

namespace codoa {

namespace {

void require_valid_caches(const SwarmState& state, const char* phase)
{
    for (const Particle& p : state.particles) {
        if (!p.fitness_valid)
            throw std::logic_error(std::string(phase) + ": stale fitness cache");
    }
}

// ir <- ir + rand * ir, the shared form of the reward and growth updates
void grow_ir(Particle& p, RandomStream& rng, const AlgorithmParams& params)
{
    p.ir = clamp_ir(p.ir + rng.next() * p.ir, params);
}

void move_particle(Particle& p, SwarmState& state, const AlgorithmParams& params, const ObjectiveProblem& problem)
{
    const std::vector<double>& target = state.global_best_position;
    const double scalar_rand = params.per_dimension_rand ? 0.0 : state.rng.next();
    for (std::size_t d = 0; d < p.position.size(); ++d) {
        const double r = params.per_dimension_rand ? state.rng.next() : scalar_rand;
        p.position[d] += r * (p.ir * (target[d] - p.position[d]));
        p.position[d] = std::clamp(p.position[d], problem.lower_bounds[d], problem.upper_bounds[d]);
    }
    p.fitness_valid = false;
}

}  // namespace

void AlgorithmParams::validate() const
{
    auto fail = [](const std::string& msg) { throw ConfigError(msg); };
    if (num_particles < 2)
        fail("num_particles must be at least 2");
    if (!std::isfinite(initial_ir) || !std::isfinite(max_ir) || !std::isfinite(min_ir) || !std::isfinite(ir_floor))
        fail("ir parameters must be finite");
    if (min_ir < 0.0)
        fail("min_ir must be non-negative");
    if (!(ir_floor > 0.0))
        fail("ir_floor must be positive");
    if (!(min_ir < ir_floor))
        fail("min_ir must be below ir_floor");
    if (!(ir_floor <= initial_ir))
        fail("initial_ir must be at least ir_floor");
    if (!(initial_ir <= max_ir))
        fail("initial_ir must not exceed max_ir");
    if (rationality_rate < 0)
        fail("rationality_rate must be non-negative");
}

double clamp_ir(double value, const AlgorithmParams& params)
{
    return std::min(std::max(value, params.ir_floor), params.max_ir);
}

std::vector<double> clamp_position(std::span<const double> position, const ObjectiveProblem& problem)
{
    if (position.size() != problem.dimension())
        throw InputError("position has " + std::to_string(position.size()) + " coordinates, problem expects " +
                         std::to_string(problem.dimension()));
    std::vector<double> out(position.begin(), position.end());
    for (std::size_t d = 0; d < out.size(); ++d)
        out[d] = std::clamp(out[d], problem.lower_bounds[d], problem.upper_bounds[d]);
    return out;
}

std::size_t best_particle_index(const SwarmState& state)
{
    std::size_t best = 0;
    for (std::size_t i = 1; i < state.particles.size(); ++i) {
        if (state.particles[i].fitness < state.particles[best].fitness)
            best = i;
    }
    return best;
}

void reward_best(SwarmState& state, const AlgorithmParams& params)
{
    require_valid_caches(state, "reward_best");
    const std::size_t idx = best_particle_index(state);
    Particle& p = state.particles[idx];
    grow_ir(p, state.rng, params);
    p.ex += 1;
    if (!state.has_archive() || p.fitness < state.global_best_fitness) {
        state.global_best_position = p.position;
        state.global_best_fitness = p.fitness;
        state.best_holder = idx;
    }
}

void socialization(SwarmState& state, const AlgorithmParams& params)
{
    require_valid_caches(state, "socialization");
    double sum = 0.0;
    for (const Particle& p : state.particles)
        sum += p.fitness;
    const double mean = sum / static_cast<double>(state.particles.size());

    for (Particle& p : state.particles) {
        if (p.fitness >= mean) {
            p.ex -= 1;
        } else {
            p.ex += 1;
            grow_ir(p, state.rng, params);
        }
    }
}

void decay_all_ir(SwarmState& state, const AlgorithmParams& params)
{
    for (Particle& p : state.particles)
        p.ir = clamp_ir(state.rng.next() * p.ir, params);
}

void move_toward_best(SwarmState& state, const AlgorithmParams& params, const ObjectiveProblem& problem,
                      const ParticleSelector& selector)
{
    if (!state.has_archive())
        throw std::logic_error("move_toward_best: global best archive is empty");
    for (std::size_t i = 0; i < state.particles.size(); ++i) {
        Particle& p = state.particles[i];
        if (selector(i, p))
            move_particle(p, state, params, problem);
    }
}

void evaluate_swarm(SwarmState& state, const ObjectiveProblem& problem)
{
    for (Particle& p : state.particles) {
        if (p.fitness_valid)
            continue;
        const double value = problem.evaluate(p.position);
        p.fitness = std::isfinite(value) ? value : std::numeric_limits<double>::infinity();
        p.fitness_valid = true;
        ++state.eval_count;
    }
}

void grow_immature_ir(SwarmState& state, const AlgorithmParams& params)
{
    for (Particle& p : state.particles) {
        if (p.ex <= params.maturity_limit)
            grow_ir(p, state.rng, params);
    }
}

void maturation(SwarmState& state, const AlgorithmParams& params)
{
    grow_immature_ir(state, params);
    // positions are untouched here, so the cached fitnesses are still current
    reward_best(state, params);
}

void rationalizing(SwarmState& state, const AlgorithmParams& params, const ObjectiveProblem& problem)
{
    if (!state.has_archive())
        throw std::logic_error("rationalizing: global best archive is empty");
    const double holder_ir = state.particles.at(state.best_holder).ir;
    for (Particle& p : state.particles) {
        if (p.ex < 0) {
            p.ir = clamp_ir(p.ir + state.rng.next() * (holder_ir / p.ir), params);
            move_particle(p, state, params, problem);
        } else {
            for (int k = 0; k < params.rationality_rate; ++k)
                p.ir = clamp_ir(p.ir + state.rng.next() * (holder_ir / p.ir), params);
        }
    }
}

void balancing(SwarmState& state, const AlgorithmParams& params, const ObjectiveProblem& problem)
{
    decay_all_ir(state, params);
    evaluate_swarm(state, problem);
    reward_best(state, params);
}

SwarmState initialize(const AlgorithmParams& params, const ObjectiveProblem& problem, std::uint64_t seed)
{
    return initialize(params, problem, RandomStream(seed));
}

SwarmState initialize(const AlgorithmParams& params, const ObjectiveProblem& problem, RandomStream rng)
{
    params.validate();
    problem.validate();

    SwarmState state;
    state.rng = std::move(rng);
    state.particles.resize(params.num_particles);
    const std::size_t dim = problem.dimension();
    for (Particle& p : state.particles) {
        p.position.resize(dim);
        for (std::size_t d = 0; d < dim; ++d) {
            const double lo = problem.lower_bounds[d];
            const double hi = problem.upper_bounds[d];
            p.position[d] = std::min(lo + state.rng.next() * (hi - lo), hi);
        }
        p.ir = params.initial_ir;
        p.ex = params.initial_ex;
        p.fitness_valid = false;
    }
    evaluate_swarm(state, problem);
    reward_best(state, params);
    return state;
}

void iterate(SwarmState& state, const AlgorithmParams& params, const ObjectiveProblem& problem)
{
    socialization(state, params);
    decay_all_ir(state, params);
    const std::size_t holder = state.best_holder;
    move_toward_best(state, params, problem, [holder](std::size_t i, const Particle&) { return i != holder; });
    evaluate_swarm(state, problem);
    reward_best(state, params);
    maturation(state, params);
    rationalizing(state, params, problem);
    balancing(state, params, problem);
    ++state.iteration;
    state.best_history.push_back(state.global_best_fitness);
}

RunResult run(const AlgorithmParams& params, const ObjectiveProblem& problem, std::uint64_t seed)
{
    SwarmState state = initialize(params, problem, seed);
    state.best_history.reserve(params.max_iterations);
    for (std::size_t it = 0; it < params.max_iterations; ++it)
        iterate(state, params, problem);

    RunResult result;
    result.best_fitness = state.global_best_fitness;
    result.best_position = state.global_best_position;
    result.best_per_iteration = std::move(state.best_history);
    result.eval_count = state.eval_count;
    result.seed = seed;
    result.params = params;
    return result;
}

}  // namespace codoa
