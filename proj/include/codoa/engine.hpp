#pragma once

// Cognitive Development Optimization Algorithm (CoDOA).
//
// A swarm of particles, each carrying an interactivity rate (ir) that scales
// its step toward the archived global best and a signed experience counter
// (ex) that gates which updates it receives. One iteration runs the phases
// socialization, ir decay, move, reward, maturation, rationalizing and
// balancing in that fixed order. Minimization only.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <vector>

#include "codoa/problem.hpp"
#include "codoa/random.hpp"

namespace codoa {

struct AlgorithmParams {
    std::size_t num_particles = 50;
    std::size_t max_iterations = 5000;
    double initial_ir = 0.5;
    double max_ir = 10.0;
    double min_ir = 0.0;  // declared lower limit; ir_floor is what is enforced
    double ir_floor = 1e-6;
    int maturity_limit = 3;
    int rationality_rate = 2;
    int initial_ex = 0;
    // false: one rand per particle for the move equations instead of one per dimension
    bool per_dimension_rand = true;

    /// Throws ConfigError naming the first violated constraint.
    void validate() const;

    bool operator==(const AlgorithmParams&) const = default;
};

struct Particle {
    std::vector<double> position;
    double fitness = std::numeric_limits<double>::infinity();
    double ir = 0.0;
    int ex = 0;
    bool fitness_valid = false;

    bool operator==(const Particle&) const = default;
};

struct SwarmState {
    std::vector<Particle> particles;
    std::vector<double> global_best_position;
    double global_best_fitness = std::numeric_limits<double>::infinity();
    std::size_t best_holder = 0;
    std::size_t iteration = 0;
    RandomStream rng;
    std::size_t eval_count = 0;
    std::vector<double> best_history;

    bool has_archive() const noexcept { return !global_best_position.empty(); }

    bool operator==(const SwarmState&) const = default;
};

struct RunResult {
    double best_fitness = std::numeric_limits<double>::infinity();
    std::vector<double> best_position;
    std::vector<double> best_per_iteration;
    std::size_t eval_count = 0;
    std::uint64_t seed = 0;
    AlgorithmParams params;

    bool operator==(const RunResult&) const = default;
};

using ParticleSelector = std::function<bool(std::size_t index, const Particle&)>;

double clamp_ir(double value, const AlgorithmParams& params);

/// Throws InputError if `position` does not match the problem dimension.
std::vector<double> clamp_position(std::span<const double> position, const ObjectiveProblem& problem);

/// Index of the minimal-fitness particle, lowest index on ties.
std::size_t best_particle_index(const SwarmState& state);

/// Grows the ir of the current best particle by rand*ir and bumps its ex.
/// Moves the archive (and best_holder) to it when it beats the archive.
/// Requires valid fitness caches.
void reward_best(SwarmState& state, const AlgorithmParams& params);

/// Below-mean particles gain experience and ir; the rest lose experience.
void socialization(SwarmState& state, const AlgorithmParams& params);

/// ir <- rand * ir for every particle.
void decay_all_ir(SwarmState& state, const AlgorithmParams& params);

/// pos <- pos + rand * ir * (global_best - pos) for each selected particle,
/// clamped to the box. Invalidates the fitness cache of moved particles.
void move_toward_best(SwarmState& state, const AlgorithmParams& params, const ObjectiveProblem& problem,
                      const ParticleSelector& selector);

/// Re-evaluates stale particles. Non-finite values are stored as +infinity.
void evaluate_swarm(SwarmState& state, const ObjectiveProblem& problem);

/// ir <- ir + rand * ir for every particle with ex <= maturity_limit.
void grow_immature_ir(SwarmState& state, const AlgorithmParams& params);

/// grow_immature_ir followed by reward_best.
void maturation(SwarmState& state, const AlgorithmParams& params);

void rationalizing(SwarmState& state, const AlgorithmParams& params, const ObjectiveProblem& problem);

void balancing(SwarmState& state, const AlgorithmParams& params, const ObjectiveProblem& problem);

/// Random placement, first evaluation, first reward. Throws ConfigError.
SwarmState initialize(const AlgorithmParams& params, const ObjectiveProblem& problem, std::uint64_t seed);

/// Same as above with a caller-supplied stream (e.g. a pinned one).
SwarmState initialize(const AlgorithmParams& params, const ObjectiveProblem& problem, RandomStream rng);

void iterate(SwarmState& state, const AlgorithmParams& params, const ObjectiveProblem& problem);

RunResult run(const AlgorithmParams& params, const ObjectiveProblem& problem, std::uint64_t seed);

}  // namespace codoa
