#include "qsyn/gates.hpp"

#include <cmath>
#include <stdexcept>

#include "json.hpp"

namespace qsyn {

namespace {

Eigen::MatrixXcd hadamard() {
    Eigen::MatrixXcd h(2, 2);
    double s = 1.0 / std::sqrt(2.0);
    h << s, s, s, -s;
    return h;
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

std::string basis_label(int index, int n_qubits) {
    std::string s(n_qubits, '0');
    for (int q = n_qubits - 1; q >= 0; --q) {
        if (index & 1) s[q] = '1';
        index >>= 1;
    }
    return s;
}

// Truth table read off the matrix; valid for permutation-with-phase gates.
std::vector<TruthTableRow> table_from_matrix(const Eigen::MatrixXcd& m,
                                             int n_qubits) {
    std::vector<TruthTableRow> rows;
    for (int j = 0; j < m.cols(); ++j) {
        int out_idx = -1;
        for (int i = 0; i < m.rows(); ++i)
            if (std::abs(m(i, j)) > 1e-9) {
                if (out_idx >= 0)
                    throw std::logic_error("table_from_matrix: not a monomial column");
                out_idx = i;
            }
        rows.push_back({basis_label(j, n_qubits), basis_label(out_idx, n_qubits),
                        m(out_idx, j)});
    }
    return rows;
}

}  // namespace

std::string to_string(GateName g) {
    switch (g) {
        case GateName::CZ: return "CZ";
        case GateName::CCZ: return "CCZ";
        case GateName::TOFFOLI: return "TOFFOLI";
        case GateName::FREDKIN: return "FREDKIN";
        case GateName::CZZ: return "CZZ";
        case GateName::CXX: return "CXX";
    }
    return "?";
}

GateName gate_name_from_string(const std::string& s) {
    if (s == "CZ") return GateName::CZ;
    if (s == "CCZ") return GateName::CCZ;
    if (s == "TOFFOLI") return GateName::TOFFOLI;
    if (s == "FREDKIN") return GateName::FREDKIN;
    if (s == "CZZ") return GateName::CZZ;
    if (s == "CXX") return GateName::CXX;
    throw std::invalid_argument("unknown gate name: " + s);
}

GateName synthesis_target(GateName name) {
    if (name == GateName::TOFFOLI) return GateName::CCZ;
    if (name == GateName::CXX) return GateName::CZZ;
    return name;
}

GateTarget make_target(GateName name) {
    const Eigen::MatrixXcd id2 = Eigen::MatrixXcd::Identity(2, 2);
    GateTarget g;
    g.name = name;
    switch (name) {
        case GateName::CZ: {
            Eigen::VectorXcd d(4);
            d << 1, 1, 1, -1;
            g.matrix = d.asDiagonal();
            break;
        }
        case GateName::CCZ: {
            Eigen::VectorXcd d = Eigen::VectorXcd::Ones(8);
            d[7] = -1;
            g.matrix = d.asDiagonal();
            break;
        }
        case GateName::CZZ: {
            // Z on qubits 2 and 3 when qubit 1 is |1>: sign (-1)^(q2+q3) on
            // the q1=1 block.
            Eigen::VectorXcd d = Eigen::VectorXcd::Ones(8);
            d[5] = -1;  // |101>
            d[6] = -1;  // |110>
            g.matrix = d.asDiagonal();
            break;
        }
        case GateName::FREDKIN: {
            Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(8, 8);
            m(5, 5) = m(6, 6) = 0;
            m(5, 6) = m(6, 5) = 1;  // |101> <-> |110>
            g.matrix = m;
            break;
        }
        case GateName::TOFFOLI: {
            Eigen::MatrixXcd conj = kron(kron(id2, id2), hadamard());
            g.matrix = conj * make_target(GateName::CCZ).matrix * conj;
            break;
        }
        case GateName::CXX: {
            Eigen::MatrixXcd conj = kron(id2, kron(hadamard(), hadamard()));
            g.matrix = conj * make_target(GateName::CZZ).matrix * conj;
            break;
        }
    }
    // Snap rounding noise so the H-conjugated forms have exact 0/±1 entries.
    for (int i = 0; i < g.matrix.rows(); ++i)
        for (int j = 0; j < g.matrix.cols(); ++j) {
            auto& v = g.matrix(i, j);
            double re = v.real(), im = v.imag();
            if (std::abs(re - std::round(re)) < 1e-12) re = std::round(re);
            if (std::abs(im - std::round(im)) < 1e-12) im = std::round(im);
            v = {re, im};
        }
    g.truth_table = table_from_matrix(g.matrix, g.n_qubits());
    return g;
}

GateTarget make_target(const std::string& name) {
    return make_target(gate_name_from_string(name));
}

TruthTableReport verify_truth_table(const GateTarget& g, double tol) {
    TruthTableReport report;
    const int n = g.n_qubits();
    const int dim = 1 << n;
    for (const auto& row : g.truth_table) {
        int in_idx = std::stoi(row.input, nullptr, 2);
        int out_idx = std::stoi(row.output, nullptr, 2);
        Eigen::VectorXcd v = g.matrix.col(in_idx);
        bool ok = std::abs(v[out_idx] - row.amplitude) < tol;
        for (int i = 0; ok && i < dim; ++i)
            if (i != out_idx && std::abs(v[i]) > tol) ok = false;
        report.row_ok.push_back(ok);
        report.all_ok = report.all_ok && ok;
    }
    return report;
}

std::string GateTarget::to_json() const {
    nlohmann::json j;
    j["name"] = qsyn::to_string(name);
    auto rows = nlohmann::json::array();
    for (int i = 0; i < matrix.rows(); ++i) {
        auto row = nlohmann::json::array();
        for (int k = 0; k < matrix.cols(); ++k)
            row.push_back({matrix(i, k).real(), matrix(i, k).imag()});
        rows.push_back(row);
    }
    j["matrix"] = rows;
    return j.dump(2);
}

}  // namespace qsyn
