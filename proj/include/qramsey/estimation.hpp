// estimation.hpp — uncertainty curves and optimal operating points: exact CSS
// closed forms (collective and even-odd), second-order cumulant OATS moments
// for arbitrary geometries, optimal squeezing/rotation angles, error
// propagation, and measurement-time optimization

#pragma once

#include "qramsey/coefficients.hpp"
#include "qramsey/dynamics.hpp"

#include <functional>
#include <vector>

namespace qramsey::estimation {

struct ProtocolConfig {
    int n_qubits = 2;
    double total_time = 1.0; // T
    double b = 0.0;
    dynamics::InitialState state;
    coefficients::TransitGeometry geometry;
    noise::SpectralModel model;
};

struct UncertaintyCurve {
    std::vector<double> times;
    std::vector<double> delta_b;
    std::vector<double> dispersion; // empty unless a sampled protocol fills it
    double tau_opt = 0.0;
    double delta_b_opt = 0.0;
    bool boundary_minimum = false;
};

struct AngleResult {
    double theta_opt = 0.0;
    double beta_opt = 0.0;
    double A = 0.0;
    double B = 0.0;
    double delta = 0.0;
    double theta_asymptotic = 0.0; // 12^{1/6} 2^{2/3} N^{-2/3}
    double beta_asymptotic = 0.0;  // pi/2 - 3^{-1/6}N^{-1/3} - 3^{1/6}N^{-2/3}/2
    double min_variance = 0.0;     // noiseless Delta J_y^2 at the optimum
};

// Initial (noiseless) variance of J_y for an OATS with angles (theta, beta).
double oats_initial_jy_variance(int n_qubits, double theta, double beta);

// Exact beta_opt = pi/2 - delta(theta) plus 1-D minimized theta_opt.
AngleResult optimal_angles(int n_qubits);

// Exact CSS uncertainty closed forms (also their no-quantum-noise variants).
// Blow-up domains return +infinity.
double css_uncertainty_collective(int n_qubits, double total_time, double chi,
                                  double psi, double t, bool zero_psi = false);
double css_uncertainty_even_odd(int n_qubits, double total_time, double chi_s,
                                double chi_d, double psi_s, double psi_d,
                                double t, bool zero_psi = false);

// Dispatcher computing the coefficients from the model (collective/even-odd).
double css_uncertainty(const ProtocolConfig& config, double t,
                       bool zero_psi = false,
                       const numerics::QuadratureSpec& spec = {});

struct MomentPair {
    double jy_mean = 0.0;
    double jy2_mean = 0.0;
    double d_jy_mean_db = 0.0; // analytic derivative
};

// Second-order cumulant moments of J_y for an OATS; chi and psi are the decay
// and phase matrices at time t.
MomentPair oats_moments(const Eigen::MatrixXd& chi, const Eigen::MatrixXd& psi,
                        double theta, double beta, double b, double t);

// Structured evaluations (O(1) per time point).
MomentPair oats_moments_collective(double chi, double psi, int n_qubits,
                                   double theta, double beta, double b, double t);
MomentPair oats_moments_even_odd(double chi_s, double chi_d, double psi_s,
                                 double psi_d, int n_qubits, double theta,
                                 double beta, double b, double t);

// Error propagation Delta b = Delta J_y / (sqrt(nu) |d<J_y>/db|), nu = T/tau.
double propagate(const MomentPair& moments, double nu);

// Evaluates delta_b(t) on a log-spaced grid and refines the minimum by
// golden-section search (relative 1e-6 in t). A minimum at the range boundary
// is flagged, not hidden.
UncertaintyCurve optimize_curve(const std::function<double(double)>& delta_b_of_t,
                                double t_lo, double t_hi, int grid_points);

// Spec'd front-end: dispatches CSS (collective/even-odd closed forms) and OATS
// (cumulant moments at the bt = pi operating point).
UncertaintyCurve optimize_time(const ProtocolConfig& config, double t_lo,
                               double t_hi, int grid_points,
                               const numerics::QuadratureSpec& spec = {});

// Delta b(t) for an OATS under collective/even-odd noise evaluated at the
// bt = pi operating point with angles (theta, beta).
double oats_delta_b(const ProtocolConfig& config, double theta, double beta,
                    double t, const numerics::QuadratureSpec& spec = {});

} // namespace qramsey::estimation
