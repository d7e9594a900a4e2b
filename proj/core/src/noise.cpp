#include "qsyn/noise.hpp"

#include <cmath>
#include <stdexcept>

namespace qsyn {

namespace {

using cd = std::complex<double>;

double binom(int n, int k) {
    double v = 1.0;
    for (int i = 1; i <= k; ++i) v = v * (n - k + i) / i;
    return v;
}

double completeness_deficit(const std::vector<Eigen::MatrixXcd>& ops, int dim) {
    Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto& k : ops) s += k.adjoint() * k;
    return (Eigen::MatrixXcd::Identity(dim, dim) - s).cwiseAbs().maxCoeff();
}

}  // namespace

KrausSet amplitude_damping_kraus(double t, double t1, int order) {
    if (t < 0.0) throw std::invalid_argument("amplitude_damping_kraus: t < 0");
    if (order < 0 || order > 3)
        throw std::invalid_argument("amplitude_damping_kraus: order must be 0..3");
    const double decay = std::exp(-t / t1);  // t1 = inf gives the identity channel
    KrausSet set;
    set.duration = t;
    for (int l = 0; l <= order; ++l) {
        Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(4, 4);
        for (int j = l; j <= 3; ++j)
            a(j - l, j) = std::sqrt(binom(j, l)) *
                          std::pow(decay, 0.5 * (j - l)) *
                          std::pow(1.0 - decay, 0.5 * l);
        set.operators.push_back(a);
    }
    set.completeness_deficit = completeness_deficit(set.operators, 4);
    return set;
}

KrausSet phase_damping_kraus(double t, double t2, int order) {
    if (t < 0.0) throw std::invalid_argument("phase_damping_kraus: t < 0");
    if (order < 0) throw std::invalid_argument("phase_damping_kraus: order < 0");
    KrausSet set;
    set.duration = t;
    double log_fact = 0.0;  // log(l!)
    for (int l = 0; l <= order; ++l) {
        if (l > 0) log_fact += std::log(static_cast<double>(l));
        Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(4, 4);
        for (int j = 0; j <= 3; ++j) {
            double rate = j * j * t / t2;  // 0 for j = 0 or t2 = inf
            double amp;
            if (l == 0) {
                amp = std::exp(-0.5 * rate);
            } else if (rate == 0.0) {
                amp = 0.0;
            } else {
                amp = std::exp(-0.5 * rate + 0.5 * (l * std::log(rate) - log_fact));
            }
            a(j, j) = amp;
        }
        set.operators.push_back(a);
    }
    set.completeness_deficit = completeness_deficit(set.operators, 4);
    return set;
}

Eigen::MatrixXcd apply_single_site_kraus(const Eigen::MatrixXcd& rho,
                                         const std::vector<Eigen::MatrixXcd>& ops,
                                         int site, int n_sites, int levels) {
    const int dim = static_cast<int>(rho.rows());
    int stride = 1;
    for (int k = site + 1; k < n_sites; ++k) stride *= levels;

    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
    Eigen::MatrixXcd tmp(dim, dim);
    for (const auto& a : ops) {
        // tmp = (I x A x I) rho : transform the site digit of the row index
        tmp.setZero();
        for (int r = 0; r < dim; ++r) {
            int digit = (r / stride) % levels;
            int base = r - digit * stride;
            for (int b = 0; b < levels; ++b) {
                cd amp = a(digit, b);
                if (amp != 0.0) tmp.row(r) += amp * rho.row(base + b * stride);
            }
        }
        // out += tmp (I x A x I)^dag : transform the column index
        for (int c = 0; c < dim; ++c) {
            int digit = (c / stride) % levels;
            int base = c - digit * stride;
            for (int b = 0; b < levels; ++b) {
                cd amp = std::conj(a(digit, b));
                if (amp != 0.0) out.col(c) += amp * tmp.col(base + b * stride);
            }
        }
    }
    return out;
}

Eigen::MatrixXcd embed_unitary(const Eigen::MatrixXcd& u_trunc,
                               const ExcitationBasis& basis) {
    int full = 1;
    for (int k = 0; k < basis.n_transmons; ++k) full *= basis.levels;
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(full, full);
    for (int i = 0; i < basis.dim; ++i) {
        u(basis.full_index[i], basis.full_index[i]) = 0.0;
        for (int j = 0; j < basis.dim; ++j)
            u(basis.full_index[i], basis.full_index[j]) = u_trunc(i, j);
    }
    return u;
}

DecoherenceChannel::DecoherenceChannel(const NoiseSpec& noise, double dt,
                                       int n_sites, double trace_tol)
    : n_sites_(n_sites), trace_tol_(trace_tol),
      amplitude_(amplitude_damping_kraus(dt, noise.t1, noise.kraus_order)),
      phase_(phase_damping_kraus(dt, noise.t2, noise.kraus_order)) {}

Eigen::MatrixXcd DecoherenceChannel::apply_kraus(const Eigen::MatrixXcd& rho) const {
    Eigen::MatrixXcd out = rho;
    for (int site = 0; site < n_sites_; ++site) {
        out = apply_single_site_kraus(out, amplitude_.operators, site, n_sites_);
        out = apply_single_site_kraus(out, phase_.operators, site, n_sites_);
    }
    double tr = out.trace().real();
    last_trace_deficit_ = std::abs(1.0 - tr);
    if (last_trace_deficit_ > trace_tol_)
        throw std::runtime_error("DecoherenceChannel: trace deficit " +
                                 std::to_string(last_trace_deficit_) +
                                 " exceeds tolerance");
    return out / tr;
}

Eigen::MatrixXcd DecoherenceChannel::apply_step(
    const Eigen::MatrixXcd& rho, const Eigen::MatrixXcd& u_step) const {
    return apply_kraus(u_step * rho * u_step.adjoint());
}

Eigen::MatrixXcd apply_channel_step(const Eigen::MatrixXcd& rho,
                                    const Eigen::MatrixXcd& u_step,
                                    const NoiseSpec& noise, double dt) {
    int n_sites = 0;
    for (int dim = static_cast<int>(rho.rows()); dim > 1; dim /= 4) ++n_sites;
    DecoherenceChannel channel(noise, dt, n_sites);
    return channel.apply_step(rho, u_step);
}

double average_state_fidelity(const TransmonChainSpec& spec,
                              const PulseTable& pulse, const GateTarget& target,
                              const NoiseSpec& noise,
                              const PhaseCompensation& comp,
                              int substeps_per_bin) {
    pulse.validate();
    if (substeps_per_bin <= 0) substeps_per_bin = default_substeps(pulse.shape);

    const TruncatedChain chain = TruncatedChain::build(spec, spec.n_transmons);
    const ExcitationBasis& basis = chain.basis;
    const int full = spec.full_dim();
    const int d = basis.comp_dim();
    const double bin_dt = pulse.dt();

    // Per-bin unitaries embedded into the full space.
    std::vector<Eigen::MatrixXcd> bin_unitaries;
    for (int l = 0; l < pulse.n_intervals(); ++l) {
        Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(basis.dim, basis.dim);
        const double step_dt = bin_dt / substeps_per_bin;
        for (int s = 0; s < substeps_per_bin; ++s) {
            double t_mid = l * bin_dt + (s + 0.5) * step_dt;
            Eigen::MatrixXd h = chain.hamiltonian(pulse.sample(t_mid));
            u = step_unitary(h, basis, step_dt) * u;
        }
        bin_unitaries.push_back(embed_unitary(u, basis));
    }

    DecoherenceChannel channel(noise, bin_dt, spec.n_transmons);

    // Ideal outputs: the phase-compensated target image of each basis state.
    Eigen::MatrixXcd compensated =
        local_z_diagonal(comp.beta_post).asDiagonal() * target.matrix *
        Eigen::MatrixXcd(local_z_diagonal(comp.beta_pre).asDiagonal());

    double total = 0.0;
    for (int k = 0; k < d; ++k) {
        Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(full, full);
        int idx = basis.full_index[basis.computational[k]];
        rho(idx, idx) = 1.0;
        for (const auto& u : bin_unitaries) rho = channel.apply_step(rho, u);

        Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(full);
        for (int i = 0; i < d; ++i)
            psi[basis.full_index[basis.computational[i]]] = compensated(i, k);
        total += std::sqrt(std::abs((psi.adjoint() * rho * psi)(0, 0)));
    }
    return total / d;
}

}  // namespace qsyn
