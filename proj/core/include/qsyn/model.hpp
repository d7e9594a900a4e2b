// model.hpp — transmon-chain Hamiltonian, excitation-number basis, truncation.
//
// Units: all Hamiltonians are H/h in GHz, all times in ns. Propagators apply
// the angular factor 2*pi explicitly (see propagation.hpp).

#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace qsyn {

// Physical constants of a chain of frequency-tunable four-level transmons
// with nearest-neighbor XY coupling.
struct TransmonChainSpec {
    int n_transmons = 3;
    int levels = 4;
    double eta = 0.200;        // second-level anharmonicity, GHz
    double eta_prime = 0.600;  // third-level anharmonicity, GHz
    double g = 0.030;          // coupling strength, GHz
    double freq_min = -2.5;    // lower bound on each eps_k(t), GHz
    double freq_max = 2.5;     // upper bound, GHz

    // eta' = 3*eta (cubic approximation of the transmon potential).
    static TransmonChainSpec cubic(int n_transmons = 3, double eta = 0.200,
                                   double g = 0.030) {
        TransmonChainSpec s;
        s.n_transmons = n_transmons;
        s.eta = eta;
        s.eta_prime = 3.0 * eta;
        s.g = g;
        return s;
    }

    void validate() const {
        if (n_transmons < 2 || n_transmons > 3)
            throw std::invalid_argument("TransmonChainSpec: n_transmons must be 2 or 3");
        if (levels != 4)
            throw std::invalid_argument("TransmonChainSpec: levels must be 4");
        if (!(eta > 0.0) || !(g > 0.0))
            throw std::invalid_argument("TransmonChainSpec: eta and g must be positive");
        if (!(freq_min < freq_max))
            throw std::invalid_argument("TransmonChainSpec: freq_min must be < freq_max");
    }

    int full_dim() const {
        int d = 1;
        for (int k = 0; k < n_transmons; ++k) d *= levels;
        return d;
    }
};

// Ordered basis of occupation states (n_1,...,n_K) with sum(n_i) <= m.
// States are sorted by total excitation number, then lexicographically by
// (n_1,...,n_K); transmon 1 is the most significant digit throughout.
struct ExcitationBasis {
    int n_transmons = 0;
    int levels = 0;
    int max_excitation = 0;
    int dim = 0;
    std::vector<std::vector<int>> states;  // occupation tuples, basis order
    std::vector<int> full_index;           // index of each state in the 4^K tensor basis
    std::vector<int> block_offset;         // start of each excitation sector; size m+2
    std::vector<int> computational;        // basis positions of states with all n_i in {0,1},
                                           // ordered by the binary word q1 q2 ... qK (q1 = MSB)

    static ExcitationBasis build(int n_transmons, int levels, int max_excitation);

    int comp_dim() const { return static_cast<int>(computational.size()); }
};

// Full-space Hamiltonian H/h in GHz in the 4^K tensor basis. Real symmetric:
// the XX+YY coupling has real entries. `freqs` holds eps_k in GHz, one per
// transmon.
Eigen::MatrixXd build_hamiltonian(const TransmonChainSpec& spec,
                                  const std::vector<double>& freqs);

// Diagonal of the total excitation number operator in the 4^K tensor basis.
Eigen::VectorXd excitation_number_diagonal(int n_transmons, int levels);

// Max-norm of [H, N]. Zero (to rounding) for the rotating-wave XY coupling.
double excitation_commutator_norm(const Eigen::MatrixXd& h, int n_transmons,
                                  int levels);

// O_m H O_m^dagger in ExcitationBasis ordering. Throws if H is not
// excitation-preserving within `tol` (truncation would change the dynamics).
Eigen::MatrixXd project_to_excitation_subspace(const Eigen::MatrixXd& h,
                                               const ExcitationBasis& basis,
                                               double tol = 1e-9);

// Precomputed pieces of the truncated Hamiltonian, split so that
//   H(eps) = h_const + sum_k eps_k * diag(site_number[k]).
// h_const carries the anharmonicity diagonal and the coupling.
struct TruncatedChain {
    TransmonChainSpec spec;
    ExcitationBasis basis;
    Eigen::MatrixXd h_const;
    std::vector<Eigen::VectorXd> site_number;  // occupation of site k per basis state

    static TruncatedChain build(const TransmonChainSpec& spec, int max_excitation);

    Eigen::MatrixXd hamiltonian(const Eigen::VectorXd& freqs) const {
        Eigen::MatrixXd h = h_const;
        for (int k = 0; k < spec.n_transmons; ++k)
            h.diagonal() += freqs[k] * site_number[k];
        return h;
    }
};

struct SpectrumTable {
    std::vector<double> swept_values;          // GHz
    std::vector<Eigen::VectorXd> eigenvalues;  // sorted ascending, GHz
};

// Eigenvalues of the (optionally truncated) Hamiltonian as one transmon's
// frequency is swept over [range_lo, range_hi]. max_excitation < 0 disables
// truncation.
SpectrumTable spectrum_sweep(const TransmonChainSpec& spec,
                             const std::vector<double>& fixed_freqs,
                             int swept_transmon, double range_lo,
                             double range_hi, int n_points,
                             int max_excitation = -1);

}  // namespace qsyn
