// gates.hpp — target unitaries and truth tables for CZ, CCZ/Toffoli,
// Fredkin, CZZ/CXX. Basis ordering |q1 q2 q3> with qubit 1 the MSB.

#pragma once

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace qsyn {

enum class GateName { CZ, CCZ, TOFFOLI, FREDKIN, CZZ, CXX };

std::string to_string(GateName g);
GateName gate_name_from_string(const std::string& s);

struct TruthTableRow {
    std::string input;    // basis label, e.g. "110"
    std::string output;
    std::complex<double> amplitude;  // +1, -1 for the gates here
};

struct GateTarget {
    GateName name;
    Eigen::MatrixXcd matrix;  // 4x4 for CZ, 8x8 otherwise
    std::vector<TruthTableRow> truth_table;

    int n_qubits() const { return matrix.rows() == 4 ? 2 : 3; }

    std::string to_json() const;  // real/imag entry pairs
};

GateTarget make_target(GateName name);
GateTarget make_target(const std::string& name);

struct TruthTableReport {
    std::vector<bool> row_ok;
    bool all_ok = true;
};

// Applies g.matrix to each basis vector and checks the truth table rows.
TruthTableReport verify_truth_table(const GateTarget& g, double tol = 1e-12);

// The gate actually synthesized for a requested name: TOFFOLI -> CCZ and
// CXX -> CZZ (Hadamards are assumed ideal); others map to themselves.
GateName synthesis_target(GateName name);

}  // namespace qsyn
