// pulses.hpp — control-pulse parameterizations for the transmon frequencies.
//
// Two shapes are supported:
//  * piecewise_constant: N values, each held over a bin of width theta/N.
//  * piecewise_erf: N knots at t_l = l*theta/(N-1), joined by erf ramps that
//    model the first-order Gaussian-filter distortion. Outside the first/last
//    knot midpoint the value is held at the knot.

#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace qsyn {

enum class PulseShape { piecewise_constant, piecewise_erf };

std::string to_string(PulseShape s);
PulseShape pulse_shape_from_string(const std::string& s);

// K x N table of per-transmon frequency values in GHz; the optimizer's genome.
struct PulseTable {
    int n_transmons = 0;
    int n_bins = 0;          // N: values (pc) or knots (erf) per transmon
    double theta = 0.0;      // total duration, ns
    PulseShape shape = PulseShape::piecewise_constant;
    Eigen::MatrixXd values;  // K x N, GHz

    PulseTable() = default;
    PulseTable(int n_transmons, int n_bins, double theta, PulseShape shape);

    // Bin width (pc) or knot spacing (erf), ns.
    double dt() const {
        return shape == PulseShape::piecewise_constant ? theta / n_bins
                                                       : theta / (n_bins - 1);
    }
    // Number of constant segments (pc) or erf intervals.
    int n_intervals() const {
        return shape == PulseShape::piecewise_constant ? n_bins : n_bins - 1;
    }

    void validate() const;

    // Per-transmon frequencies at time t in [0, theta].
    Eigen::VectorXd sample(double t) const;

    // Flattened genome view (row-major per transmon) and its inverse.
    Eigen::VectorXd flatten() const;
    static PulseTable from_genome(const Eigen::VectorXd& genome, int n_transmons,
                                  double theta, PulseShape shape);

    std::string to_json() const;
    static PulseTable from_json(const std::string& text);

    // CSV `t_ns,eps1_ghz,...` sampled at n_samples points over [0, theta].
    std::string to_csv(int n_samples) const;
};

// Avoided-crossing CZ pulse: detuned at omega_off, plateau at omega_on.
struct CzPulseSpec {
    double omega_off = 7.5;  // GHz
    double omega_on = 6.7;   // GHz
    double t_ramp = 2.0;     // ns
    double t_gate = 26.0;    // ns

    double t_on() const { return t_gate - 2.0 * t_ramp; }
    void validate() const {
        if (!(t_gate > 2.0 * t_ramp))
            throw std::invalid_argument("CzPulseSpec: t_gate must exceed 2*t_ramp");
    }
};

// eps_2(t) for the CZ pulse, t in [0, t_gate].
double cz_pulse(const CzPulseSpec& spec, double t);

// Adds delta_eps_khz * u to every entry, u iid uniform on [-1, 1].
// delta_eps is given in kHz (1 kHz = 1e-6 GHz). The result is not re-clipped
// to the spec bounds; robustness scans measure raw sensitivity.
PulseTable perturb_pulse(const PulseTable& p, double delta_eps_khz,
                         std::mt19937_64& rng);

}  // namespace qsyn
