// qsyn — pulse synthesis and evaluation for tunable-transmon gate design.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qsyn/experiments.hpp"

namespace {

qsyn::RunConfig resolve_config(const std::string& config_file,
                               std::optional<std::uint64_t> seed,
                               const std::string& out_dir) {
    qsyn::RunConfig cfg;
    if (!config_file.empty()) cfg = qsyn::load_run_config(config_file);
    if (seed) cfg.optimizer.seed = *seed;
    if (!out_dir.empty()) cfg.output_dir = out_dir;
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Single-shot multi-qubit gate pulse synthesis for tunable "
                 "transmon chains"};
    app.require_subcommand(1);

    std::string config_file, out_dir, pulse_file;
    std::optional<std::uint64_t> seed;
    int workers = 1;
    app.add_option("--config", config_file, "JSON run configuration")
        ->check(CLI::ExistingFile);
    app.add_option("--seed", seed, "Override the optimizer seed");
    app.add_option("--out", out_dir, "Output directory");
    app.add_option("--workers", workers,
                   "Worker threads (evaluation is serial; accepted for "
                   "interface stability)");

    auto* optimize = app.add_subcommand(
        "optimize", "Optimize a pulse for the configured gate");

    auto* sweep = app.add_subcommand(
        "sweep-time", "Best fidelity over a (g, theta) grid");
    std::vector<double> g_list{30.0};
    std::vector<double> theta_grid;
    double threshold = 0.999;
    sweep->add_option("--g-mhz", g_list, "Coupling strengths, MHz");
    sweep->add_option("--theta-ns", theta_grid, "Gate times, ns")->required();
    sweep->add_option("--threshold", threshold, "Fidelity threshold");

    auto* robust = app.add_subcommand(
        "robustness", "Fidelity under uniform pulse-amplitude perturbations");
    std::vector<double> delta_grid{0.0,    100.0,  200.0,  500.0, 1000.0,
                                   1500.0, 2000.0, 2500.0, 3000.0};
    int trials = 20;
    robust->add_option("--pulse", pulse_file, "Optimized pulse JSON")
        ->required()
        ->check(CLI::ExistingFile);
    robust->add_option("--delta-khz", delta_grid, "Perturbation scales, kHz");
    robust->add_option("--trials", trials, "Trials per scale");

    auto* deco = app.add_subcommand(
        "decoherence", "Average state fidelity vs coherence time");
    std::vector<double> t_grid{10.0, 20.0, 30.0, 60.0};
    deco->add_option("--pulse", pulse_file, "Optimized pulse JSON")
        ->required()
        ->check(CLI::ExistingFile);
    deco->add_option("--T-us", t_grid, "Coherence times T1 = T2, microseconds");

    auto* spectrum = app.add_subcommand(
        "spectrum", "Eigenvalues vs one swept transmon frequency");
    int swept = 1, n_points = 201, max_exc = -1;
    double lo = -2.5, hi = 2.5;
    std::vector<double> fixed{0.0, 0.0, 0.0};
    std::string spectrum_out = "spectrum.csv";
    spectrum->add_option("--transmon", swept, "1-based index of the swept transmon");
    spectrum->add_option("--lo", lo, "Sweep start, GHz");
    spectrum->add_option("--hi", hi, "Sweep end, GHz");
    spectrum->add_option("--points", n_points, "Sweep points");
    spectrum->add_option("--fixed", fixed, "Fixed frequencies, GHz");
    spectrum->add_option("--max-excitation", max_exc,
                         "Excitation cutoff (-1 = full space)");
    spectrum->add_option("--file", spectrum_out, "Output CSV path");

    auto* cz = app.add_subcommand(
        "cz-study", "Two-transmon avoided-crossing CZ gate scan");
    double cz_g = 30.0, cz_eta = 200.0;
    cz->add_option("--g-mhz", cz_g, "Coupling strength, MHz");
    cz->add_option("--eta-mhz", cz_eta, "Anharmonicity, MHz");

    auto* verify = app.add_subcommand("verify", "Run the built-in check suite");
    (void)verify;

    CLI11_PARSE(app, argc, argv);

    try {
        qsyn::RunConfig cfg = resolve_config(config_file, seed, out_dir);
        if (optimize->parsed()) return qsyn::cmd_optimize(cfg, std::cout);
        if (sweep->parsed())
            return qsyn::cmd_sweep_time(cfg, g_list, theta_grid, threshold,
                                        std::cout);
        if (robust->parsed())
            return qsyn::cmd_robustness(cfg, pulse_file, delta_grid, trials,
                                        std::cout);
        if (deco->parsed())
            return qsyn::cmd_decoherence(cfg, pulse_file, t_grid, std::cout);
        if (spectrum->parsed()) {
            qsyn::TransmonChainSpec spec = cfg.chain_spec();
            fixed.resize(spec.n_transmons, 0.0);
            return qsyn::cmd_spectrum(
                spec, fixed, swept - 1, lo, hi, n_points, max_exc,
                std::filesystem::path(cfg.output_dir) / spectrum_out,
                std::cout);
        }
        if (cz->parsed())
            return qsyn::cmd_cz_study(cz_g, cz_eta, cfg.output_dir, std::cout);
        if (verify->parsed()) return qsyn::cmd_verify(std::cout);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return qsyn::kExitError;
    }
    return qsyn::kExitError;
}
