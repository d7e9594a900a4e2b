// noise.hpp — single-transmon Kraus decoherence (amplitude + phase damping)
// applied site-wise in the full 4^K product space, and the average state
// fidelity of a pulse under that noise.

#pragma once

#include <Eigen/Dense>

#include <vector>

#include "qsyn/gates.hpp"
#include "qsyn/model.hpp"
#include "qsyn/propagation.hpp"
#include "qsyn/pulses.hpp"

namespace qsyn {

struct NoiseSpec {
    double t1 = 30000.0;  // ns (30 us)
    double t2 = 30000.0;  // ns; the default model assumes T = T1 = T2
    int kraus_order = 3;

    static NoiseSpec uniform(double t_ns) { return {t_ns, t_ns, 3}; }
};

struct KrausSet {
    std::vector<Eigen::MatrixXcd> operators;  // 4x4, single transmon
    double duration = 0.0;                    // ns
    double completeness_deficit = 0.0;        // ||I - sum K^dag K||_max
};

// A_l(t), l = 0..order: truncated-oscillator amplitude damping with decay
// factor exp(-t/T1). order > 3 is rejected (four-level transmon).
KrausSet amplitude_damping_kraus(double t, double t1, int order);

// Dephasing Kraus set with per-level rate j^2/T2, l = 0..order.
KrausSet phase_damping_kraus(double t, double t2, int order);

// rho -> sum_l (I x K_l x I) rho (...)^dag, K_l acting on `site`.
Eigen::MatrixXcd apply_single_site_kraus(const Eigen::MatrixXcd& rho,
                                         const std::vector<Eigen::MatrixXcd>& ops,
                                         int site, int n_sites, int levels = 4);

// Embeds a truncated-basis unitary into the full 4^K space, identity on the
// complement (states above the excitation cutoff).
Eigen::MatrixXcd embed_unitary(const Eigen::MatrixXcd& u_trunc,
                               const ExcitationBasis& basis);

// One Trotter step: unitary bin evolution followed by per-transmon amplitude
// then phase damping of the same duration. Precomputes the Kraus sets once.
class DecoherenceChannel {
  public:
    DecoherenceChannel(const NoiseSpec& noise, double dt, int n_sites,
                       double trace_tol = 1e-6);

    // K(dt)[U rho U^dag], renormalized by trace. Throws if the
    // pre-normalization trace deviates from 1 by more than trace_tol.
    Eigen::MatrixXcd apply_step(const Eigen::MatrixXcd& rho,
                                const Eigen::MatrixXcd& u_step) const;

    // Kraus map only (no unitary).
    Eigen::MatrixXcd apply_kraus(const Eigen::MatrixXcd& rho) const;

    double last_trace_deficit() const { return last_trace_deficit_; }
    const KrausSet& amplitude() const { return amplitude_; }
    const KrausSet& phase() const { return phase_; }

  private:
    int n_sites_;
    double trace_tol_;
    KrausSet amplitude_;
    KrausSet phase_;
    mutable double last_trace_deficit_ = 0.0;
};

Eigen::MatrixXcd apply_channel_step(const Eigen::MatrixXcd& rho,
                                    const Eigen::MatrixXcd& u_step,
                                    const NoiseSpec& noise, double dt);

// Average state fidelity: each computational basis state evolves through the
// per-bin unitary + Kraus split; compared against the phase-compensated
// target image. `comp` comes from the noiseless compensated_fidelity run.
double average_state_fidelity(const TransmonChainSpec& spec,
                              const PulseTable& pulse, const GateTarget& target,
                              const NoiseSpec& noise,
                              const PhaseCompensation& comp,
                              int substeps_per_bin = 0);

}  // namespace qsyn
