#include "qsyn/model.hpp"

#include <algorithm>
#include <cmath>

namespace qsyn {

namespace {

// Ladder matrix elements: <n-1| X |n> = sqrt(n) for the truncated oscillator.
// X and Y/i as 4x4 real matrices; (XX+YY)/2 keeps only excitation-preserving
// terms, with real entries.
Eigen::MatrixXd ladder_x(int levels) {
    Eigen::MatrixXd x = Eigen::MatrixXd::Zero(levels, levels);
    for (int n = 1; n < levels; ++n) {
        x(n - 1, n) = std::sqrt(static_cast<double>(n));
        x(n, n - 1) = std::sqrt(static_cast<double>(n));
    }
    return x;
}

// Digits of a tensor-basis index, transmon 1 most significant.
std::vector<int> occupations(int index, int n_transmons, int levels) {
    std::vector<int> occ(n_transmons);
    for (int k = n_transmons - 1; k >= 0; --k) {
        occ[k] = index % levels;
        index /= levels;
    }
    return occ;
}

int tensor_index(const std::vector<int>& occ, int levels) {
    int idx = 0;
    for (int n : occ) idx = idx * levels + n;
    return idx;
}

}  // namespace

ExcitationBasis ExcitationBasis::build(int n_transmons, int levels,
                                       int max_excitation) {
    if (n_transmons < 1 || levels < 2 || max_excitation < 0)
        throw std::invalid_argument("ExcitationBasis: bad arguments");
    ExcitationBasis b;
    b.n_transmons = n_transmons;
    b.levels = levels;
    b.max_excitation = max_excitation;

    int full = 1;
    for (int k = 0; k < n_transmons; ++k) full *= levels;

    // Gather by excitation sector, lexicographic within a sector. Iterating
    // tensor indices in order already yields lexicographic (n_1,...,n_K).
    b.block_offset.assign(max_excitation + 2, 0);
    for (int exc = 0; exc <= max_excitation; ++exc) {
        b.block_offset[exc] = static_cast<int>(b.states.size());
        for (int idx = 0; idx < full; ++idx) {
            auto occ = occupations(idx, n_transmons, levels);
            int total = 0;
            for (int n : occ) total += n;
            if (total != exc) continue;
            b.states.push_back(occ);
            b.full_index.push_back(idx);
        }
    }
    b.block_offset[max_excitation + 1] = static_cast<int>(b.states.size());
    b.dim = static_cast<int>(b.states.size());

    // Computational subspace ordered by the binary word q1...qK.
    b.computational.assign(std::size_t(1) << n_transmons, -1);
    for (int pos = 0; pos < b.dim; ++pos) {
        bool comp = true;
        int word = 0;
        for (int n : b.states[pos]) {
            if (n > 1) { comp = false; break; }
            word = (word << 1) | n;
        }
        if (comp) b.computational[word] = pos;
    }
    for (int v : b.computational)
        if (v < 0)
            throw std::logic_error("ExcitationBasis: computational state missing "
                                   "(max_excitation too small)");
    return b;
}

Eigen::MatrixXd build_hamiltonian(const TransmonChainSpec& spec,
                                  const std::vector<double>& freqs) {
    spec.validate();
    if (static_cast<int>(freqs.size()) != spec.n_transmons)
        throw std::invalid_argument("build_hamiltonian: freqs size mismatch");

    const int K = spec.n_transmons;
    const int L = spec.levels;
    const int dim = spec.full_dim();
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);

    // Per-site diagonal: (0, eps_k, 2 eps_k - eta, 3 eps_k - eta').
    for (int idx = 0; idx < dim; ++idx) {
        auto occ = occupations(idx, K, L);
        double e = 0.0;
        for (int k = 0; k < K; ++k) {
            switch (occ[k]) {
                case 1: e += freqs[k]; break;
                case 2: e += 2.0 * freqs[k] - spec.eta; break;
                case 3: e += 3.0 * freqs[k] - spec.eta_prime; break;
                default: break;
            }
        }
        h(idx, idx) = e;
    }

    // (g/2) sum_k (X_k X_{k+1} + Y_k Y_{k+1}); in ladder form the
    // excitation-preserving part is g (a_k a_{k+1}^dag + h.c.) with
    // sqrt(n) matrix elements.
    const Eigen::MatrixXd x = ladder_x(L);
    for (int idx = 0; idx < dim; ++idx) {
        auto occ = occupations(idx, K, L);
        for (int k = 0; k + 1 < K; ++k) {
            // hop one excitation from site k+1 to site k
            if (occ[k] + 1 < L && occ[k + 1] - 1 >= 0) {
                auto occ2 = occ;
                occ2[k] += 1;
                occ2[k + 1] -= 1;
                int jdx = tensor_index(occ2, L);
                double amp = spec.g * x(occ[k] + 1, occ[k]) * x(occ[k + 1] - 1, occ[k + 1]);
                h(jdx, idx) += amp;
                h(idx, jdx) += amp;
            }
        }
    }
    return h;
}

Eigen::VectorXd excitation_number_diagonal(int n_transmons, int levels) {
    int dim = 1;
    for (int k = 0; k < n_transmons; ++k) dim *= levels;
    Eigen::VectorXd n(dim);
    for (int idx = 0; idx < dim; ++idx) {
        auto occ = occupations(idx, n_transmons, levels);
        int total = 0;
        for (int v : occ) total += v;
        n[idx] = total;
    }
    return n;
}

double excitation_commutator_norm(const Eigen::MatrixXd& h, int n_transmons,
                                  int levels) {
    const Eigen::VectorXd n = excitation_number_diagonal(n_transmons, levels);
    // [H, N]_{ij} = H_{ij} (N_j - N_i) for diagonal N.
    double worst = 0.0;
    for (int i = 0; i < h.rows(); ++i)
        for (int j = 0; j < h.cols(); ++j)
            worst = std::max(worst, std::abs(h(i, j) * (n[j] - n[i])));
    return worst;
}

Eigen::MatrixXd project_to_excitation_subspace(const Eigen::MatrixXd& h,
                                               const ExcitationBasis& basis,
                                               double tol) {
    if (h.rows() != h.cols())
        throw std::invalid_argument("project_to_excitation_subspace: H not square");
    int full = 1;
    for (int k = 0; k < basis.n_transmons; ++k) full *= basis.levels;
    if (h.rows() != full)
        throw std::invalid_argument("project_to_excitation_subspace: H dim mismatch");
    double comm = excitation_commutator_norm(h, basis.n_transmons, basis.levels);
    if (comm > tol)
        throw std::runtime_error(
            "project_to_excitation_subspace: H is not excitation-preserving "
            "(commutator norm " + std::to_string(comm) + ")");

    Eigen::MatrixXd out(basis.dim, basis.dim);
    for (int i = 0; i < basis.dim; ++i)
        for (int j = 0; j < basis.dim; ++j)
            out(i, j) = h(basis.full_index[i], basis.full_index[j]);
    return out;
}

TruncatedChain TruncatedChain::build(const TransmonChainSpec& spec,
                                     int max_excitation) {
    spec.validate();
    TruncatedChain tc;
    tc.spec = spec;
    tc.basis = ExcitationBasis::build(spec.n_transmons, spec.levels, max_excitation);

    std::vector<double> zero(spec.n_transmons, 0.0);
    tc.h_const = project_to_excitation_subspace(build_hamiltonian(spec, zero),
                                                tc.basis, 1e-12);
    tc.site_number.resize(spec.n_transmons);
    for (int k = 0; k < spec.n_transmons; ++k) {
        Eigen::VectorXd occ(tc.basis.dim);
        for (int i = 0; i < tc.basis.dim; ++i)
            occ[i] = tc.basis.states[i][k];
        tc.site_number[k] = occ;
    }
    return tc;
}

SpectrumTable spectrum_sweep(const TransmonChainSpec& spec,
                             const std::vector<double>& fixed_freqs,
                             int swept_transmon, double range_lo,
                             double range_hi, int n_points,
                             int max_excitation) {
    spec.validate();
    if (n_points < 2)
        throw std::invalid_argument("spectrum_sweep: n_points must be >= 2");
    if (swept_transmon < 0 || swept_transmon >= spec.n_transmons)
        throw std::invalid_argument("spectrum_sweep: swept_transmon out of range");
    if (!std::isfinite(range_lo) || !std::isfinite(range_hi))
        throw std::invalid_argument("spectrum_sweep: range must be finite");

    ExcitationBasis basis;
    if (max_excitation >= 0)
        basis = ExcitationBasis::build(spec.n_transmons, spec.levels, max_excitation);

    SpectrumTable table;
    std::vector<double> freqs = fixed_freqs;
    for (int p = 0; p < n_points; ++p) {
        double eps = range_lo + (range_hi - range_lo) * p / (n_points - 1);
        freqs[swept_transmon] = eps;
        Eigen::MatrixXd h = build_hamiltonian(spec, freqs);
        if (max_excitation >= 0)
            h = project_to_excitation_subspace(h, basis, 1e-9);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h, Eigen::EigenvaluesOnly);
        table.swept_values.push_back(eps);
        table.eigenvalues.push_back(es.eigenvalues());
    }
    return table;
}

}  // namespace qsyn
