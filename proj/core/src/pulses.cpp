#include "qsyn/pulses.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "json.hpp"

namespace qsyn {

std::string to_string(PulseShape s) {
    return s == PulseShape::piecewise_constant ? "piecewise_constant"
                                               : "piecewise_erf";
}

PulseShape pulse_shape_from_string(const std::string& s) {
    if (s == "piecewise_constant") return PulseShape::piecewise_constant;
    if (s == "piecewise_erf") return PulseShape::piecewise_erf;
    throw std::invalid_argument("unknown pulse shape: " + s);
}

PulseTable::PulseTable(int n_transmons_, int n_bins_, double theta_,
                       PulseShape shape_)
    : n_transmons(n_transmons_), n_bins(n_bins_), theta(theta_), shape(shape_),
      values(Eigen::MatrixXd::Zero(n_transmons_, n_bins_)) {
    validate();
}

void PulseTable::validate() const {
    if (n_transmons < 1) throw std::invalid_argument("PulseTable: n_transmons < 1");
    if (n_bins < 2) throw std::invalid_argument("PulseTable: n_bins < 2");
    if (!(theta > 0.0)) throw std::invalid_argument("PulseTable: theta must be > 0");
    if (values.rows() != n_transmons || values.cols() != n_bins)
        throw std::invalid_argument("PulseTable: values shape mismatch");
}

Eigen::VectorXd PulseTable::sample(double t) const {
    if (t < 0.0 || t > theta)
        throw std::invalid_argument("PulseTable::sample: t outside [0, theta]");
    Eigen::VectorXd out(n_transmons);
    if (shape == PulseShape::piecewise_constant) {
        // right-open bins, last bin right-closed
        int l = std::min(static_cast<int>(t / dt()), n_bins - 1);
        out = values.col(l);
    } else {
        const double d = dt();
        int l = std::min(static_cast<int>(t / d), n_bins - 2);
        double mid = (l + 0.5) * d;
        double w = std::erf(5.0 / d * (t - mid));
        for (int k = 0; k < n_transmons; ++k) {
            double a = values(k, l), b = values(k, l + 1);
            out[k] = 0.5 * (a + b) + 0.5 * (b - a) * w;
        }
    }
    return out;
}

Eigen::VectorXd PulseTable::flatten() const {
    Eigen::VectorXd g(n_transmons * n_bins);
    for (int k = 0; k < n_transmons; ++k)
        g.segment(k * n_bins, n_bins) = values.row(k);
    return g;
}

PulseTable PulseTable::from_genome(const Eigen::VectorXd& genome,
                                   int n_transmons, double theta,
                                   PulseShape shape) {
    if (genome.size() % n_transmons != 0)
        throw std::invalid_argument("PulseTable::from_genome: size mismatch");
    int n = static_cast<int>(genome.size()) / n_transmons;
    PulseTable p(n_transmons, n, theta, shape);
    for (int k = 0; k < n_transmons; ++k)
        p.values.row(k) = genome.segment(k * n, n);
    return p;
}

std::string PulseTable::to_json() const {
    nlohmann::json j;
    j["theta_ns"] = theta;
    j["dt_ns"] = dt();
    j["shape"] = to_string(shape);
    auto rows = nlohmann::json::array();
    for (int k = 0; k < n_transmons; ++k) {
        auto row = nlohmann::json::array();
        for (int l = 0; l < n_bins; ++l) row.push_back(values(k, l));
        rows.push_back(row);
    }
    j["values"] = rows;
    return j.dump(2);
}

PulseTable PulseTable::from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    auto rows = j.at("values");
    int K = static_cast<int>(rows.size());
    if (K < 1) throw std::invalid_argument("PulseTable::from_json: empty values");
    int N = static_cast<int>(rows[0].size());
    PulseTable p(K, N, j.at("theta_ns").get<double>(),
                 pulse_shape_from_string(j.at("shape").get<std::string>()));
    for (int k = 0; k < K; ++k) {
        if (static_cast<int>(rows[k].size()) != N)
            throw std::invalid_argument("PulseTable::from_json: ragged values");
        for (int l = 0; l < N; ++l) p.values(k, l) = rows[k][l].get<double>();
    }
    return p;
}

std::string PulseTable::to_csv(int n_samples) const {
    if (n_samples < 2) throw std::invalid_argument("PulseTable::to_csv: n_samples < 2");
    std::ostringstream os;
    os << "t_ns";
    for (int k = 0; k < n_transmons; ++k) os << ",eps" << (k + 1) << "_ghz";
    os << "\n";
    char buf[64];
    for (int s = 0; s < n_samples; ++s) {
        double t = theta * s / (n_samples - 1);
        Eigen::VectorXd v = sample(t);
        std::snprintf(buf, sizeof buf, "%.12g", t);
        os << buf;
        for (int k = 0; k < n_transmons; ++k) {
            std::snprintf(buf, sizeof buf, "%.12g", v[k]);
            os << ',' << buf;
        }
        os << "\n";
    }
    return os.str();
}

double cz_pulse(const CzPulseSpec& spec, double t) {
    spec.validate();
    if (t < 0.0 || t > spec.t_gate)
        throw std::invalid_argument("cz_pulse: t outside [0, t_gate]");
    double a = std::erf((4.0 * t - 2.0 * spec.t_ramp) / spec.t_ramp);
    double b = std::erf((4.0 * t - 4.0 * spec.t_gate + 2.0 * spec.t_ramp) / spec.t_ramp);
    return spec.omega_off + 0.5 * (spec.omega_on - spec.omega_off) * (a - b);
}

PulseTable perturb_pulse(const PulseTable& p, double delta_eps_khz,
                         std::mt19937_64& rng) {
    if (delta_eps_khz < 0.0)
        throw std::invalid_argument("perturb_pulse: delta_eps must be >= 0");
    const double delta_ghz = delta_eps_khz * 1e-6;
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    PulseTable out = p;
    for (int k = 0; k < p.n_transmons; ++k)
        for (int l = 0; l < p.n_bins; ++l)
            out.values(k, l) += delta_ghz * u(rng);
    return out;
}

}  // namespace qsyn
