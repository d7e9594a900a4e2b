// propagation.hpp — time-ordered evolution under a pulse, computational-
// subspace projection, local-Z phase compensation, intrinsic fidelity.
//
// Convention: U = exp(-i * 2*pi * (H/h) * t) with H/h in GHz and t in ns.

#pragma once

#include <Eigen/Dense>

#include <functional>
#include <vector>

#include "qsyn/gates.hpp"
#include "qsyn/model.hpp"
#include "qsyn/pulses.hpp"

namespace qsyn {

struct EvolutionResult {
    Eigen::MatrixXcd full_unitary;           // ExcitationBasis ordering
    Eigen::MatrixXcd computational_unitary;  // P U P^dagger
    Eigen::VectorXd leakage;                 // 1 - column norm^2, per comp input
};

struct PhaseCompensation {
    std::vector<double> beta_pre;   // radians, [0, 2*pi)
    std::vector<double> beta_post;
};

// Single time step exp(-i 2*pi H dt), exponentiated per excitation block.
Eigen::MatrixXcd step_unitary(const Eigen::MatrixXd& h,
                              const ExcitationBasis& basis, double dt);

// Diagonal of U_pre/post(beta) in the computational basis: entry j carries
// exp(-i sum_m beta_m bit_m(j)), qubit 1 the MSB.
Eigen::VectorXcd local_z_diagonal(const std::vector<double>& beta);

// Evolution under a PulseTable; truncation at m = n_transmons excitations.
// For piecewise-constant pulses substeps_per_bin = 1 is exact; erf pulses are
// integrated by midpoint sampling within each knot interval.
EvolutionResult propagate(const TruncatedChain& chain, const PulseTable& pulse,
                          int substeps_per_bin);
EvolutionResult propagate(const TransmonChainSpec& spec, const PulseTable& pulse,
                          int substeps_per_bin);

// Evolution under an arbitrary frequency trajectory (used by the CZ study).
EvolutionResult propagate_trajectory(
    const TruncatedChain& chain,
    const std::function<Eigen::VectorXd(double)>& freqs_at, double duration,
    int n_steps);

// Intrinsic fidelity maximized over local-Z phase compensation:
//   max_beta (1/d) |Tr((U_post U_target U_pre)^dagger U_cb)|.
// Multi-start exact coordinate ascent on the 2*n_qubits angles.
std::pair<double, PhaseCompensation> compensated_fidelity(
    const Eigen::MatrixXcd& u_cb, const Eigen::MatrixXcd& target);

// (1/d) |Tr(T^dagger U)|, no compensation.
double trace_fidelity(const Eigen::MatrixXcd& u_cb, const Eigen::MatrixXcd& target);

// Operator-norm (spectral) distance ||U_cb - T||; diagnostic metric only.
double operator_norm_distance(const Eigen::MatrixXcd& u_cb,
                              const Eigen::MatrixXcd& target);

int default_substeps(PulseShape shape);  // 1 for pc, 20 for erf

// Objective for the optimizer: propagate then compensate.
double fitness(const TransmonChainSpec& spec, const PulseTable& pulse,
               const GateTarget& target, int substeps_per_bin);

// Caches the truncated chain and target so repeated genome evaluations skip
// the setup work. Genomes are flattened K x N pulse tables.
class FitnessEvaluator {
  public:
    FitnessEvaluator(const TransmonChainSpec& spec, GateTarget target,
                     double theta, PulseShape shape, int substeps_per_bin);

    double operator()(const Eigen::VectorXd& genome) const;
    double evaluate(const PulseTable& pulse) const;
    std::pair<double, PhaseCompensation> evaluate_with_phases(
        const PulseTable& pulse) const;

    const TruncatedChain& chain() const { return chain_; }
    const GateTarget& target() const { return target_; }
    double theta() const { return theta_; }
    PulseShape shape() const { return shape_; }
    int substeps() const { return substeps_; }

  private:
    TruncatedChain chain_;
    GateTarget target_;
    double theta_;
    PulseShape shape_;
    int substeps_;
};

}  // namespace qsyn
