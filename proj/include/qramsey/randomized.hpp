// randomized.hpp — spatially randomized Ramsey protocol: Gaussian position
// sampling, spatially averaged cumulants, validity conditions, GHZ and OATS
// Monte Carlo uncertainty curves with dispersion bars, and the sample-size
// bound

#pragma once

#include "qramsey/dynamics.hpp"
#include "qramsey/estimation.hpp"

#include <vector>

namespace qramsey::randomized {

struct RcConfig {
    double epsilon = 0.0; // spatial dispersion (length)
    double eta = 0.0;     // (v / epsilon) / omega_c
    int n_samples = 20;   // K
    std::uint64_t seed = 1;
    int dimension = 1;
    double validity_threshold = 0.1;

    // Fills the missing one of (epsilon, eta) from the model and checks
    // consistency when both are set.
    void resolve(const noise::SpectralModel& model);
};

// N positions i.i.d. from the isotropic zero-mean Gaussian with standard
// deviation epsilon per axis; layout_index selects the random stream.
coefficients::TransitGeometry sample_layout(int n_qubits, const RcConfig& rc,
                                            const noise::SpectralModel& model,
                                            std::uint64_t layout_index);

struct SpatialMeans {
    double kappa0_bar = 0.0; // qubit-local decay mean
    double kappa1_bar = 0.0; // cross-pair decay mean
    double xi_bar = 0.0;     // cross-pair phase mean
    double kappa0_sq_const = 0.0; // short-time kappa0_bar / (w_c t)^2
    double xi0_cu_const = 0.0;    // short-time xi_bar / (eta^{s+2} (w_c t)^3)
};

SpatialMeans spatial_means(const noise::SpectralModel& model, const RcConfig& rc,
                           double t, const numerics::QuadratureSpec& spec = {});

struct SecondCumulantIntegrals {
    double F1 = 0.0, F2 = 0.0, G1 = 0.0, G2 = 0.0, FG2 = 0.0;
};

SecondCumulantIntegrals
spatial_second_cumulant_integrals(const noise::SpectralModel& model,
                                  const RcConfig& rc, double t);

struct StateCumulants {
    double delta_gamma_sq = 0.0;
    double delta_phi0_sq = 0.0;
    double cov_gamma_phi0 = 0.0;
};

StateCumulants spatial_second_cumulants(const noise::SpectralModel& model,
                                        const RcConfig& rc, double t,
                                        const dynamics::BasisPair& pair);

struct ValidityResult {
    double cond_i = 0.0;  // eta (w_c t)^2 N
    double cond_ii = 0.0; // eta^{s+1} (w_c t)^2 N^2
    bool valid = false;
};

ValidityResult validity_check(const RcConfig& rc, int n_qubits, double t,
                              const noise::SpectralModel& model);

struct RcCurve {
    std::vector<double> times;
    std::vector<double> delta_b;    // finite-K Monte Carlo estimate
    std::vector<double> dispersion; // sigma of the estimate
    std::vector<double> reference;  // eta = 0 analytic curve
};

// First-order-cumulant prediction of the sampled mean of e^{-gamma} for a
// basis pair (used by the validity cross-checks).
double mean_decay_prediction(const noise::SpectralModel& model, const RcConfig& rc,
                             double t, const dynamics::BasisPair& pair);

// Sampled decay exponent gamma(r, t) of a basis pair for one layout, in the
// reduced-dynamics normalization (matches dynamics::element_factor).
double sampled_gamma(const noise::SpectralModel& model,
                     const coefficients::TransitGeometry& layout,
                     const dynamics::BasisPair& pair, double t);

// eta = 0 reference curves and their closed-form optima.
double ghz_eta0_delta_b(const noise::SpectralModel& model, int n_qubits,
                        double total_time, double t);
double oats_eta0_delta_b(const noise::SpectralModel& model, int n_qubits,
                         double total_time, double t);

struct Eta0Optimum {
    double tau_opt = 0.0;
    double delta_b_opt = 0.0;
};

Eta0Optimum ghz_eta0_optimum(const noise::SpectralModel& model, int n_qubits,
                             double total_time);
Eta0Optimum oats_eta0_optimum(const noise::SpectralModel& model, int n_qubits,
                              double total_time);

// Monte Carlo curves over K sampled layouts (D = 1).
RcCurve ghz_rc(const noise::SpectralModel& model, const RcConfig& rc, int n_qubits,
               double total_time, const std::vector<double>& t_grid);
RcCurve oats_rc(const noise::SpectralModel& model, const RcConfig& rc,
                int n_qubits, double total_time, const std::vector<double>& t_grid);

// K_min = ceil((z_{1 - eps/2} sigma / delta_e)^2), at least 1.
long long required_samples(double sigma, double delta_e, double epsilon_conf);

} // namespace qramsey::randomized
