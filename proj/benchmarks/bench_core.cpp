#include <benchmark/benchmark.h>

#include <random>

#include "qsyn/experiments.hpp"
#include "qsyn/noise.hpp"
#include "qsyn/propagation.hpp"

namespace {

Eigen::VectorXd random_genome(int dims, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-2.5, 2.5);
    Eigen::VectorXd g(dims);
    for (int j = 0; j < dims; ++j) g[j] = u(rng);
    return g;
}

void BM_FitnessPiecewiseConstant(benchmark::State& state) {
    qsyn::RunConfig cfg;
    const qsyn::FitnessEvaluator eval = cfg.make_evaluator();
    Eigen::VectorXd g = random_genome(3 * cfg.n_bins(), 7);
    for (auto _ : state) benchmark::DoNotOptimize(eval(g));
}
BENCHMARK(BM_FitnessPiecewiseConstant);

void BM_FitnessErf(benchmark::State& state) {
    qsyn::RunConfig cfg;
    cfg.pulse_shape = qsyn::PulseShape::piecewise_erf;
    const qsyn::FitnessEvaluator eval = cfg.make_evaluator();
    Eigen::VectorXd g = random_genome(3 * cfg.n_bins(), 7);
    for (auto _ : state) benchmark::DoNotOptimize(eval(g));
}
BENCHMARK(BM_FitnessErf);

void BM_PhaseCompensation(benchmark::State& state) {
    qsyn::RunConfig cfg;
    const qsyn::FitnessEvaluator eval = cfg.make_evaluator();
    Eigen::VectorXd g = random_genome(3 * cfg.n_bins(), 11);
    qsyn::PulseTable p = qsyn::PulseTable::from_genome(
        g, 3, cfg.theta_ns, cfg.pulse_shape);
    qsyn::EvolutionResult evo = qsyn::propagate(eval.chain(), p, 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(qsyn::compensated_fidelity(
            evo.computational_unitary, eval.target().matrix));
}
BENCHMARK(BM_PhaseCompensation);

void BM_KrausStep(benchmark::State& state) {
    qsyn::NoiseSpec noise = qsyn::NoiseSpec::uniform(30000.0);
    qsyn::DecoherenceChannel channel(noise, 1.0, 3);
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(64, 64);
    rho(5, 5) = 1.0;
    for (auto _ : state) benchmark::DoNotOptimize(channel.apply_kraus(rho));
}
BENCHMARK(BM_KrausStep);

}  // namespace

BENCHMARK_MAIN();
