// experiments.hpp — orchestration of the study commands behind the CLI:
// gate synthesis, fidelity-vs-time sweeps, robustness and decoherence scans,
// spectrum tables, and the two-transmon CZ study.
//
// All outputs are CSV/JSON with 12 significant digits; every CSV carries a
// comment line with the config hash and seed so re-runs are byte-identical.

#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qsyn/gates.hpp"
#include "qsyn/model.hpp"
#include "qsyn/noise.hpp"
#include "qsyn/optimizer.hpp"
#include "qsyn/propagation.hpp"
#include "qsyn/pulses.hpp"

namespace qsyn {

// Exit codes shared by all commands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitBudgetExhausted = 2;

struct RunConfig {
    GateName gate = GateName::CCZ;
    double theta_ns = 26.0;
    double dt_ns = 1.0;
    double g_mhz = 30.0;
    double eta_mhz = 200.0;
    PulseShape pulse_shape = PulseShape::piecewise_constant;
    int substeps_per_bin = 0;  // 0 = default for the shape
    SussadeConfig optimizer;   // dims filled in from theta/dt
    std::optional<NoiseSpec> noise;
    std::string output_dir = ".";

    int n_bins() const { return static_cast<int>(std::lround(theta_ns / dt_ns)); }
    TransmonChainSpec chain_spec() const;
    // Synthesis target in the hardware embedding. For CZZ/CXX the control is
    // assigned to the middle transmon (logical qubits 1 and 2 live on
    // transmons 2 and 1): the chain only couples nearest neighbors, and this
    // assignment makes both controlled phases act on directly coupled pairs.
    GateTarget target() const;
    FitnessEvaluator make_evaluator() const;
    SussadeConfig optimizer_config() const;  // with dims/bounds resolved

    std::string to_canonical_json() const;
};

// Parses the JSON schema documented in the README; unknown keys are rejected.
RunConfig parse_run_config(const std::string& json_text);
RunConfig load_run_config(const std::filesystem::path& file);

// FNV-1a over the canonical config serialization plus the seed.
std::string config_hash(const RunConfig& cfg);

std::string format_sig(double v);  // 12 significant digits

// --- commands -------------------------------------------------------------

// Artifacts: pulse.json, history.csv, report.json in cfg.output_dir.
// Returns kExitOk when target_fitness was reached, kExitBudgetExhausted
// otherwise (partial artifacts are still written).
int cmd_optimize(const RunConfig& cfg, std::ostream& log);

// One budgeted optimization per (g, theta) cell; writes sweep.csv
// (g_mhz,theta_ns,best_fidelity,evaluations) and sweep_fit.json with, per g,
// the minimal theta reaching the threshold and the linear fit of 1/theta*
// against g.
int cmd_sweep_time(const RunConfig& base, const std::vector<double>& g_mhz_list,
                   const std::vector<double>& theta_grid, double threshold,
                   std::ostream& log);

// Perturbs an optimized pulse at each delta_eps and re-evaluates the
// intrinsic fidelity; robustness.csv: delta_khz,mean_fidelity,min_fidelity.
struct RobustnessPoint {
    double delta_khz;
    double mean_fidelity;
    double min_fidelity;
};
struct RobustnessResult {
    std::vector<RobustnessPoint> points;
    double unperturbed_fidelity = 0.0;
    double largest_delta_above_9999 = 0.0;  // largest delta with mean F >= 0.9999
};
RobustnessResult robustness_scan(const RunConfig& cfg, const PulseTable& pulse,
                                 const std::vector<double>& delta_khz_grid,
                                 int trials_per_point, std::uint64_t seed);
int cmd_robustness(const RunConfig& cfg, const std::filesystem::path& pulse_file,
                   const std::vector<double>& delta_khz_grid,
                   int trials_per_point, std::ostream& log);

// F-bar over a grid of coherence times; decoherence.csv: T_us,Fbar. Also
// reports the deficit coefficient (1 - Fbar) * T / theta per point.
struct DecoherencePoint {
    double t_us;
    double fbar;
    double deficit_coefficient;
};
std::vector<DecoherencePoint> decoherence_scan(const RunConfig& cfg,
                                               const PulseTable& pulse,
                                               const std::vector<double>& t_us_grid);
int cmd_decoherence(const RunConfig& cfg, const std::filesystem::path& pulse_file,
                    const std::vector<double>& t_us_grid, std::ostream& log);

// Spectrum CSV: header epsilon_ghz,E0,E1,...; one row per sweep point.
int cmd_spectrum(const TransmonChainSpec& spec,
                 const std::vector<double>& fixed_freqs, int swept_transmon,
                 double lo, double hi, int n_points, int max_excitation,
                 const std::filesystem::path& out_file, std::ostream& log);

// Two-transmon avoided-crossing CZ gate: scans t_on (and optionally omega_on)
// and reports the best compensated CZ fidelity and the argmax t_on.
struct CzStudyResult {
    std::vector<double> t_on_grid;
    std::vector<double> fidelity;      // best over omega_on per t_on
    double best_fidelity = 0.0;
    double best_t_on = 0.0;
    double best_omega_on = 0.0;
    double predicted_t_on = 0.0;  // 1/(2 sqrt(2) g) under the 2*pi convention
};
CzStudyResult cz_study(double g_ghz, double eta_ghz, double eps1_ghz,
                       const CzPulseSpec& base,
                       const std::vector<double>& t_on_grid,
                       const std::vector<double>& omega_on_grid,
                       int steps_per_ns = 40);
int cmd_cz_study(double g_mhz, double eta_mhz,
                 const std::filesystem::path& out_dir, std::ostream& log);

// Gate truth tables plus a quick invariant suite; prints one line per check.
int cmd_verify(std::ostream& log);

}  // namespace qsyn
