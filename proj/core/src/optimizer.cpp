#include "qsyn/optimizer.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace qsyn {

namespace {

constexpr std::uint64_t kGenStream = 0xffffffffffffffffULL;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

double u01(std::mt19937_64& rng) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

// uniform on (0, 1]
double u01_open_low(std::mt19937_64& rng) { return 1.0 - u01(rng); }

std::vector<int> all_dims(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i;
    return v;
}

std::vector<int> draw_subspace(int dims, int m, std::mt19937_64& rng) {
    std::vector<int> chosen;
    std::uniform_int_distribution<int> pick(0, dims - 1);
    while (static_cast<int>(chosen.size()) < m) {
        int d = pick(rng);
        if (std::find(chosen.begin(), chosen.end(), d) == chosen.end())
            chosen.push_back(d);
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

}  // namespace

void SussadeConfig::validate() const {
    if (population < 4)
        throw std::invalid_argument("SussadeConfig: population must be >= 4");
    if (dims < 1) throw std::invalid_argument("SussadeConfig: dims must be >= 1");
    if (subspace_m < 1 || subspace_m > dims)
        throw std::invalid_argument("SussadeConfig: subspace_m out of range");
    if (switch_s < 0.0 || switch_s > 1.0)
        throw std::invalid_argument("SussadeConfig: switch_s must be in [0,1]");
    if (!(lower < upper))
        throw std::invalid_argument("SussadeConfig: lower must be < upper");
}

std::uint64_t stream_seed(std::uint64_t master, std::uint64_t generation,
                          std::uint64_t index) {
    return splitmix64(splitmix64(splitmix64(master) ^ generation) ^ index);
}

std::mt19937_64 make_stream(std::uint64_t master, std::uint64_t generation,
                            std::uint64_t index) {
    return std::mt19937_64(stream_seed(master, generation, index));
}

Eigen::VectorXd mutate(const std::vector<Individual>& pop, int i, double mu,
                       std::mt19937_64& rng) {
    const int p = static_cast<int>(pop.size());
    if (p < 4) throw std::invalid_argument("mutate: population must be >= 4");
    std::uniform_int_distribution<int> pick(0, p - 1);
    int r[3];
    for (int n = 0; n < 3; ++n) {
        int candidate;
        bool ok;
        do {
            candidate = pick(rng);
            ok = candidate != i;
            for (int m = 0; m < n; ++m) ok = ok && candidate != r[m];
        } while (!ok);
        r[n] = candidate;
    }
    return pop[r[0]].genome + mu * (pop[r[1]].genome - pop[r[2]].genome);
}

Eigen::VectorXd crossover(const Eigen::VectorXd& parent,
                          const Eigen::VectorXd& trial, double xi,
                          const std::vector<int>& active_dims,
                          std::mt19937_64& rng, bool force_index) {
    if (active_dims.empty())
        throw std::invalid_argument("crossover: active_dims is empty");
    Eigen::VectorXd child = parent;
    for (int j : active_dims)
        if (u01(rng) < xi) child[j] = trial[j];
    if (force_index) {
        std::uniform_int_distribution<size_t> pick(0, active_dims.size() - 1);
        int j = active_dims[pick(rng)];
        child[j] = trial[j];
    }
    return child;
}

std::pair<double, double> self_adapt(const Individual& ind,
                                     const SussadeConfig& cfg,
                                     std::mt19937_64& rng) {
    double r1 = u01_open_low(rng), r2 = u01_open_low(rng);
    double r3 = u01_open_low(rng), r4 = u01_open_low(rng);
    double mu = r2 < cfg.kappa1 ? cfg.mu_l + r1 * cfg.mu_u : ind.mu;
    double xi = r4 < cfg.kappa2 ? r3 : ind.xi;
    return {mu, xi};
}

void reflect_into_bounds(Eigen::VectorXd& genome, double lower, double upper) {
    const double span = upper - lower;
    for (int j = 0; j < genome.size(); ++j) {
        double v = genome[j];
        if (v >= lower && v <= upper) continue;
        // fold into a 2*span period, then mirror
        double r = std::fmod(v - lower, 2.0 * span);
        if (r < 0) r += 2.0 * span;
        genome[j] = r <= span ? lower + r : lower + 2.0 * span - r;
    }
}

namespace {

void record_generation(SussadeResult& res, std::int64_t gen,
                       const std::vector<Individual>& pop) {
    double best = -std::numeric_limits<double>::infinity();
    double mean = 0.0;
    int best_i = 0;
    for (size_t i = 0; i < pop.size(); ++i) {
        mean += pop[i].fitness;
        if (pop[i].fitness > best) {
            best = pop[i].fitness;
            best_i = static_cast<int>(i);
        }
    }
    mean /= static_cast<double>(pop.size());
    res.history.push_back({gen, best, mean});
    if (best > res.best_fitness) {
        res.best_fitness = best;
        res.best_genome = pop[best_i].genome;
    }
}

}  // namespace

SussadeResult run_sussade_from(const Objective& objective,
                               const SussadeConfig& cfg,
                               std::vector<Individual> pop,
                               std::int64_t start_generation,
                               std::int64_t evaluations_so_far) {
    cfg.validate();
    if (static_cast<int>(pop.size()) != cfg.population)
        throw std::invalid_argument("run_sussade_from: population size mismatch");

    SussadeResult res;
    res.evaluations = evaluations_so_far;
    record_generation(res, start_generation, pop);
    res.generations = start_generation;
    if (res.best_fitness >= cfg.target_fitness) {
        res.reached_target = true;
        res.population = std::move(pop);
        return res;
    }

    const int P = cfg.population;
    for (std::int64_t gen = start_generation + 1; gen <= cfg.max_generations;
         ++gen) {
        if (cfg.max_evaluations > 0 &&
            res.evaluations + P > cfg.max_evaluations)
            break;

        auto gen_rng = make_stream(cfg.seed, static_cast<std::uint64_t>(gen),
                                   kGenStream);
        std::vector<int> active = all_dims(cfg.dims);
        if (u01(gen_rng) < cfg.switch_s)
            active = draw_subspace(cfg.dims, cfg.subspace_m, gen_rng);

        std::vector<Individual> candidates(P);
        for (int i = 0; i < P; ++i) {
            auto rng = make_stream(cfg.seed, static_cast<std::uint64_t>(gen),
                                   static_cast<std::uint64_t>(i));
            auto [mu, xi] = self_adapt(pop[i], cfg, rng);
            Eigen::VectorXd trial = mutate(pop, i, mu, rng);
            Eigen::VectorXd child = crossover(pop[i].genome, trial, xi, active,
                                              rng, cfg.force_crossover_index);
            reflect_into_bounds(child, cfg.lower, cfg.upper);
            candidates[i] = {std::move(child), mu, xi,
                             -std::numeric_limits<double>::infinity()};
        }
        for (int i = 0; i < P; ++i) {
            candidates[i].fitness = objective(candidates[i].genome);
            ++res.evaluations;
        }
        for (int i = 0; i < P; ++i)
            if (candidates[i].fitness > pop[i].fitness)
                pop[i] = std::move(candidates[i]);

        record_generation(res, gen, pop);
        res.generations = gen;
        if (res.best_fitness >= cfg.target_fitness) {
            res.reached_target = true;
            break;
        }
    }
    res.population = std::move(pop);
    return res;
}

SussadeResult run_sussade(const Objective& objective, const SussadeConfig& cfg,
                          std::optional<Eigen::VectorXd> warm_start) {
    cfg.validate();
    std::vector<Individual> pop(cfg.population);
    for (int i = 0; i < cfg.population; ++i) {
        auto rng = make_stream(cfg.seed, 0, static_cast<std::uint64_t>(i));
        Individual& ind = pop[i];
        ind.genome.resize(cfg.dims);
        for (int j = 0; j < cfg.dims; ++j)
            ind.genome[j] = cfg.lower + (cfg.upper - cfg.lower) * u01(rng);
        ind.mu = cfg.mu_l + cfg.mu_u * u01(rng);
        ind.xi = u01(rng);
        if (i == 0 && warm_start) {
            if (warm_start->size() != cfg.dims)
                throw std::invalid_argument("run_sussade: warm start size mismatch");
            ind.genome = *warm_start;
        }
        ind.fitness = objective(ind.genome);
    }
    return run_sussade_from(objective, cfg, std::move(pop), 0, cfg.population);
}

std::string checkpoint_to_json(const SussadeConfig& cfg,
                               const SussadeResult& result) {
    nlohmann::json j;
    j["config"] = {{"population", cfg.population},
                   {"dims", cfg.dims},
                   {"mu_l", cfg.mu_l},
                   {"mu_u", cfg.mu_u},
                   {"kappa1", cfg.kappa1},
                   {"kappa2", cfg.kappa2},
                   {"switch_s", cfg.switch_s},
                   {"subspace_m", cfg.subspace_m},
                   {"max_generations", cfg.max_generations},
                   {"max_evaluations", cfg.max_evaluations},
                   {"target_fitness", cfg.target_fitness},
                   {"seed", cfg.seed},
                   {"lower", cfg.lower},
                   {"upper", cfg.upper},
                   {"force_crossover_index", cfg.force_crossover_index}};
    j["generation"] = result.generations;
    j["evaluations"] = result.evaluations;
    auto pop = nlohmann::json::array();
    for (const auto& ind : result.population) {
        std::vector<double> genome(ind.genome.data(),
                                   ind.genome.data() + ind.genome.size());
        pop.push_back({{"genome", genome},
                       {"mu", ind.mu},
                       {"xi", ind.xi},
                       {"fitness", ind.fitness}});
    }
    j["population"] = pop;
    return j.dump(2);
}

Checkpoint checkpoint_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    Checkpoint cp;
    const auto& c = j.at("config");
    cp.config.population = c.at("population").get<int>();
    cp.config.dims = c.at("dims").get<int>();
    cp.config.mu_l = c.at("mu_l").get<double>();
    cp.config.mu_u = c.at("mu_u").get<double>();
    cp.config.kappa1 = c.at("kappa1").get<double>();
    cp.config.kappa2 = c.at("kappa2").get<double>();
    cp.config.switch_s = c.at("switch_s").get<double>();
    cp.config.subspace_m = c.at("subspace_m").get<int>();
    cp.config.max_generations = c.at("max_generations").get<std::int64_t>();
    cp.config.max_evaluations = c.at("max_evaluations").get<std::int64_t>();
    cp.config.target_fitness = c.at("target_fitness").get<double>();
    cp.config.seed = c.at("seed").get<std::uint64_t>();
    cp.config.lower = c.at("lower").get<double>();
    cp.config.upper = c.at("upper").get<double>();
    cp.config.force_crossover_index = c.at("force_crossover_index").get<bool>();
    cp.generation = j.at("generation").get<std::int64_t>();
    cp.evaluations = j.at("evaluations").get<std::int64_t>();
    for (const auto& p : j.at("population")) {
        Individual ind;
        auto genome = p.at("genome").get<std::vector<double>>();
        ind.genome = Eigen::Map<Eigen::VectorXd>(genome.data(),
                                                 static_cast<int>(genome.size()));
        ind.mu = p.at("mu").get<double>();
        ind.xi = p.at("xi").get<double>();
        ind.fitness = p.at("fitness").get<double>();
        cp.population.push_back(std::move(ind));
    }
    return cp;
}

}  // namespace qsyn
