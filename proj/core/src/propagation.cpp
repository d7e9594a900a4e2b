#include "qsyn/propagation.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

namespace qsyn {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
using cd = std::complex<double>;

void multiply_step_in_place(Eigen::MatrixXcd& u, const Eigen::MatrixXd& h,
                            const ExcitationBasis& basis, double dt) {
    // Blocks are contiguous in the excitation-ordered basis; exponentiate and
    // multiply each sector separately.
    for (size_t b = 0; b + 1 < basis.block_offset.size(); ++b) {
        int lo = basis.block_offset[b];
        int n = basis.block_offset[b + 1] - lo;
        if (n == 0) continue;
        if (n == 1) {
            u.row(lo) *= std::exp(cd(0.0, -kTwoPi * h(lo, lo) * dt));
            continue;
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h.block(lo, lo, n, n));
        Eigen::VectorXcd phases(n);
        for (int i = 0; i < n; ++i)
            phases[i] = std::exp(cd(0.0, -kTwoPi * es.eigenvalues()[i] * dt));
        Eigen::MatrixXcd ub = es.eigenvectors().cast<cd>() * phases.asDiagonal() *
                              es.eigenvectors().transpose().cast<cd>();
        u.middleRows(lo, n) = ub * u.middleRows(lo, n);
    }
}

EvolutionResult finish(Eigen::MatrixXcd u, const ExcitationBasis& basis) {
    EvolutionResult r;
    const int d = basis.comp_dim();
    r.computational_unitary.resize(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            r.computational_unitary(i, j) =
                u(basis.computational[i], basis.computational[j]);
    r.leakage.resize(d);
    for (int j = 0; j < d; ++j)
        r.leakage[j] = 1.0 - r.computational_unitary.col(j).squaredNorm();
    r.full_unitary = std::move(u);
    return r;
}

}  // namespace

Eigen::MatrixXcd step_unitary(const Eigen::MatrixXd& h,
                              const ExcitationBasis& basis, double dt) {
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(basis.dim, basis.dim);
    multiply_step_in_place(u, h, basis, dt);
    return u;
}

Eigen::VectorXcd local_z_diagonal(const std::vector<double>& beta) {
    const int nq = static_cast<int>(beta.size());
    Eigen::VectorXcd d(1 << nq);
    for (int j = 0; j < d.size(); ++j) {
        double phi = 0.0;
        for (int m = 0; m < nq; ++m)
            if (j & (1 << (nq - 1 - m))) phi += beta[m];
        d[j] = std::exp(cd(0.0, -phi));
    }
    return d;
}

EvolutionResult propagate(const TruncatedChain& chain, const PulseTable& pulse,
                          int substeps_per_bin) {
    pulse.validate();
    if (pulse.n_transmons != chain.spec.n_transmons)
        throw std::invalid_argument("propagate: pulse/spec transmon-count mismatch");
    if (substeps_per_bin < 1)
        throw std::invalid_argument("propagate: substeps_per_bin must be >= 1");

    const int n_intervals = pulse.n_intervals();
    const double bin_dt = pulse.dt();
    const double step_dt = bin_dt / substeps_per_bin;

    Eigen::MatrixXcd u =
        Eigen::MatrixXcd::Identity(chain.basis.dim, chain.basis.dim);
    for (int l = 0; l < n_intervals; ++l) {
        for (int s = 0; s < substeps_per_bin; ++s) {
            double t_mid = l * bin_dt + (s + 0.5) * step_dt;
            Eigen::MatrixXd h = chain.hamiltonian(pulse.sample(t_mid));
            multiply_step_in_place(u, h, chain.basis, step_dt);
        }
    }
    return finish(std::move(u), chain.basis);
}

EvolutionResult propagate(const TransmonChainSpec& spec, const PulseTable& pulse,
                          int substeps_per_bin) {
    return propagate(TruncatedChain::build(spec, spec.n_transmons), pulse,
                     substeps_per_bin);
}

EvolutionResult propagate_trajectory(
    const TruncatedChain& chain,
    const std::function<Eigen::VectorXd(double)>& freqs_at, double duration,
    int n_steps) {
    if (n_steps < 1) throw std::invalid_argument("propagate_trajectory: n_steps < 1");
    const double dt = duration / n_steps;
    Eigen::MatrixXcd u =
        Eigen::MatrixXcd::Identity(chain.basis.dim, chain.basis.dim);
    for (int s = 0; s < n_steps; ++s) {
        Eigen::MatrixXd h = chain.hamiltonian(freqs_at((s + 0.5) * dt));
        multiply_step_in_place(u, h, chain.basis, dt);
    }
    return finish(std::move(u), chain.basis);
}

double trace_fidelity(const Eigen::MatrixXcd& u_cb,
                      const Eigen::MatrixXcd& target) {
    return std::abs((target.adjoint() * u_cb).trace()) / u_cb.rows();
}

double operator_norm_distance(const Eigen::MatrixXcd& u_cb,
                              const Eigen::MatrixXcd& target) {
    Eigen::MatrixXcd d = u_cb - target;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(d);
    return svd.singularValues()[0];
}

std::pair<double, PhaseCompensation> compensated_fidelity(
    const Eigen::MatrixXcd& u_cb, const Eigen::MatrixXcd& target) {
    const int d = static_cast<int>(u_cb.rows());
    if (target.rows() != d || target.cols() != d || u_cb.cols() != d)
        throw std::invalid_argument("compensated_fidelity: dimension mismatch");
    int nq = 0;
    while ((1 << nq) < d) ++nq;
    if ((1 << nq) != d)
        throw std::invalid_argument("compensated_fidelity: dim not a power of 2");

    // Tr((U_post T U_pre)^dag U) = sum_{k,j} e^{i(phi_j(pre)+phi_k(post))} M_kj
    // with M = conj(T) .* U. Each angle enters every term with bit 0 or 1, so
    // the 1-D maximization of |A + e^{i b} B| is exact: b = arg(A) - arg(B).
    Eigen::MatrixXcd m0 = target.conjugate().cwiseProduct(u_cb);

    auto bit = [nq](int idx, int q) { return (idx >> (nq - 1 - q)) & 1; };

    const int n_angles = 2 * nq;  // pre angles first, then post
    // carries[a](k,j): whether angle a multiplies term (k,j)
    std::vector<Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic>> carries(
        n_angles);
    for (int a = 0; a < n_angles; ++a) {
        carries[a].resize(d, d);
        for (int k = 0; k < d; ++k)
            for (int j = 0; j < d; ++j)
                carries[a](k, j) = a < nq ? bit(j, a) : bit(k, a - nq);
    }

    std::mt19937_64 rng(0x5eedf1de5ca1eULL);
    std::uniform_real_distribution<double> u01(0.0, kTwoPi);

    double best = -1.0;
    std::vector<double> best_beta(n_angles, 0.0);
    const int n_starts = 9;  // zero start plus 8 random starts
    for (int start = 0; start < n_starts; ++start) {
        std::vector<double> beta(n_angles, 0.0);
        if (start > 0)
            for (auto& b : beta) b = u01(rng);

        // phased terms under the current beta
        Eigen::MatrixXcd pm(d, d);
        for (int k = 0; k < d; ++k)
            for (int j = 0; j < d; ++j) {
                double phi = 0.0;
                for (int a = 0; a < n_angles; ++a)
                    if (carries[a](k, j)) phi += beta[a];
                pm(k, j) = std::exp(cd(0.0, phi)) * m0(k, j);
            }
        cd total = pm.sum();

        double value = std::abs(total);
        for (int sweep = 0; sweep < 200; ++sweep) {
            double prev = value;
            for (int a = 0; a < n_angles; ++a) {
                cd sum_b = 0.0;
                for (int k = 0; k < d; ++k)
                    for (int j = 0; j < d; ++j)
                        if (carries[a](k, j)) sum_b += pm(k, j);
                cd sum_a = total - sum_b;
                cd b_bare = sum_b * std::exp(cd(0.0, -beta[a]));
                if (std::abs(b_bare) == 0.0) continue;
                double beta_new = std::arg(sum_a) - std::arg(b_bare);
                cd factor = std::exp(cd(0.0, beta_new - beta[a]));
                for (int k = 0; k < d; ++k)
                    for (int j = 0; j < d; ++j)
                        if (carries[a](k, j)) pm(k, j) *= factor;
                total = sum_a + sum_b * factor;
                beta[a] = beta_new;
            }
            total = pm.sum();  // refresh against incremental drift
            value = std::abs(total);
            if (value - prev < 1e-12) break;
        }
        if (value > best) {
            best = value;
            best_beta = beta;
        }
    }

    PhaseCompensation comp;
    comp.beta_pre.resize(nq);
    comp.beta_post.resize(nq);
    for (int q = 0; q < nq; ++q) {
        comp.beta_pre[q] = std::fmod(std::fmod(best_beta[q], kTwoPi) + kTwoPi, kTwoPi);
        comp.beta_post[q] =
            std::fmod(std::fmod(best_beta[nq + q], kTwoPi) + kTwoPi, kTwoPi);
    }
    return {best / d, comp};
}

int default_substeps(PulseShape shape) {
    return shape == PulseShape::piecewise_constant ? 1 : 20;
}

double fitness(const TransmonChainSpec& spec, const PulseTable& pulse,
               const GateTarget& target, int substeps_per_bin) {
    EvolutionResult r = propagate(spec, pulse, substeps_per_bin);
    return compensated_fidelity(r.computational_unitary, target.matrix).first;
}

FitnessEvaluator::FitnessEvaluator(const TransmonChainSpec& spec,
                                   GateTarget target, double theta,
                                   PulseShape shape, int substeps_per_bin)
    : chain_(TruncatedChain::build(spec, spec.n_transmons)),
      target_(std::move(target)), theta_(theta), shape_(shape),
      substeps_(substeps_per_bin) {}

double FitnessEvaluator::operator()(const Eigen::VectorXd& genome) const {
    return evaluate(PulseTable::from_genome(genome, chain_.spec.n_transmons,
                                            theta_, shape_));
}

double FitnessEvaluator::evaluate(const PulseTable& pulse) const {
    EvolutionResult r = propagate(chain_, pulse, substeps_);
    return compensated_fidelity(r.computational_unitary, target_.matrix).first;
}

std::pair<double, PhaseCompensation> FitnessEvaluator::evaluate_with_phases(
    const PulseTable& pulse) const {
    EvolutionResult r = propagate(chain_, pulse, substeps_);
    return compensated_fidelity(r.computational_unitary, target_.matrix);
}

}  // namespace qsyn
