// optimizer.hpp — differential evolution with jDE-style self-adaptation and
// subspace-selective breeding (SuSSADE).
//
// Reproducibility contract: every random draw comes from a counter-based
// stream derived from (seed, generation, individual), so results do not
// depend on evaluation order. Stream layout:
//   * stream (seed, 0, i)                 — initialization of individual i
//   * stream (seed, G, 0xffff...)         — generation G >= 1: switch draw r_g,
//                                           then the m subspace dims (rejection)
//   * stream (seed, G, i)                 — individual i at generation G >= 1:
//       r1..r4 for self-adaptation, then mutation partner indices (rejection
//       until distinct and != i), then one uniform per active dim (ascending)
//       for crossover, then j_rand if forced crossover is enabled.

#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace qsyn {

struct SussadeConfig {
    int population = 32;
    int dims = 0;
    double mu_l = 0.1;      // self-adaptation floor for the mutation rate
    double mu_u = 0.1;      // range above the floor
    double kappa1 = 0.1;    // mutation-rate resample probability
    double kappa2 = 0.9;    // crossover-rate resample probability
    double switch_s = 0.5;  // probability of subspace breeding per generation
    int subspace_m = 1;
    std::int64_t max_generations = 100000;
    std::int64_t max_evaluations = 0;  // 0 = unbounded
    double target_fitness = 1.0;
    std::uint64_t seed = 1;
    double lower = -2.5;
    double upper = 2.5;
    // Canonical binomial crossover guarantees one inherited trial coordinate
    // via j_rand; off by default (the plain rule allows C_i = D_i).
    bool force_crossover_index = false;

    void validate() const;
};

struct Individual {
    Eigen::VectorXd genome;
    double mu = 0.1;
    double xi = 0.5;
    double fitness = -std::numeric_limits<double>::infinity();
};

struct GenerationStats {
    std::int64_t generation;
    double best_fitness;
    double mean_fitness;
};

struct SussadeResult {
    Eigen::VectorXd best_genome;
    double best_fitness = -std::numeric_limits<double>::infinity();
    std::vector<GenerationStats> history;
    std::int64_t evaluations = 0;
    std::int64_t generations = 0;  // last generation index executed
    bool reached_target = false;
    std::vector<Individual> population;  // final population (checkpointing)
};

using Objective = std::function<double(const Eigen::VectorXd&)>;

// Counter-based stream derivation (splitmix64 chaining).
std::uint64_t stream_seed(std::uint64_t master, std::uint64_t generation,
                          std::uint64_t index);
std::mt19937_64 make_stream(std::uint64_t master, std::uint64_t generation,
                            std::uint64_t index);

// M_i = D_r1 + mu (D_r2 - D_r3), r1,r2,r3 distinct and != i.
Eigen::VectorXd mutate(const std::vector<Individual>& pop, int i, double mu,
                       std::mt19937_64& rng);

// Coordinate-wise mix of trial and parent over the active dims.
Eigen::VectorXd crossover(const Eigen::VectorXd& parent,
                          const Eigen::VectorXd& trial, double xi,
                          const std::vector<int>& active_dims,
                          std::mt19937_64& rng, bool force_index = false);

// (mu', xi') for the coming generation; r1..r4 uniform on (0, 1].
std::pair<double, double> self_adapt(const Individual& ind,
                                     const SussadeConfig& cfg,
                                     std::mt19937_64& rng);

// Reflect out-of-bounds coordinates back into [lower, upper].
void reflect_into_bounds(Eigen::VectorXd& genome, double lower, double upper);

SussadeResult run_sussade(const Objective& objective, const SussadeConfig& cfg,
                          std::optional<Eigen::VectorXd> warm_start = {});

// Resume from a checkpointed population at `start_generation` + 1. Streams
// are derived from the absolute generation counter, so a resumed run matches
// the uninterrupted one.
SussadeResult run_sussade_from(const Objective& objective,
                               const SussadeConfig& cfg,
                               std::vector<Individual> population,
                               std::int64_t start_generation,
                               std::int64_t evaluations_so_far);

std::string checkpoint_to_json(const SussadeConfig& cfg,
                               const SussadeResult& result);
struct Checkpoint {
    SussadeConfig config;
    std::vector<Individual> population;
    std::int64_t generation = 0;
    std::int64_t evaluations = 0;
};
Checkpoint checkpoint_from_json(const std::string& text);

}  // namespace qsyn
