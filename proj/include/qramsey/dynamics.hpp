// dynamics.hpp — exact reduced dynamics: per-element evolution factors, GHZ
// evolution, quantum-noise-insensitive counting, two-qubit concurrence under
// collective noise, a random-unitary Monte Carlo oracle, and a full
// z-basis-enumeration expectation oracle for small N

#pragma once

#include "qramsey/coefficients.hpp"
#include "qramsey/rng.hpp"

#include <complex>
#include <cstdint>
#include <vector>

namespace qramsey::dynamics {

struct BasisPair {
    std::vector<int> alpha; // entries +1 / -1
    std::vector<int> beta;

    int size() const { return static_cast<int>(alpha.size()); }
    double m() const;      // (sum alpha)/2
    double mprime() const; // (sum beta)/2
    double theta_ab() const; // N cos(theta) = sum alpha_n beta_n

    void validate() const;
};

struct ElementFactor {
    double gamma = 0.0;        // >= 0
    double phi0 = 0.0;
    double phi1 = 0.0;
    double signal_phase = 0.0; // (b t / 2) sum (beta_n - alpha_n)

    std::complex<double> factor() const;
};

ElementFactor element_factor(const BasisPair& pair,
                             const coefficients::CoefficientSet& coeffs,
                             double b, double t);

// GHZ pair evolution: populations stay 1/2, the |up...><down...| coherence is
// (1/2) e^{-gamma_ghz} e^{-iNbt}.
struct GhzEvolution {
    double gamma_ghz = 0.0;
    std::complex<double> upper_coherence{0.0};
};

GhzEvolution ghz_evolve(int n_qubits, const coefficients::CoefficientSet& coeffs,
                        double b, double t);

enum class QniRegime { general, collective, even_odd };

struct QniCounts {
    long long enumerated = -1; // -1 when enumeration was skipped (N too large)
    long long formula = 0;
    bool enumerated_valid = false;
};

// Counts z-basis matrix elements whose bath-induced phases vanish structurally
// (for every value of the regime's coefficient functions). Enumeration runs
// for N <= 12; above that only the closed-form count is returned.
QniCounts qni_enumerate(QniRegime regime, int n_qubits);

// Wootters concurrence of the two-qubit reduced state of an N-qubit CSS (+x)
// under collective dephasing with scalar coefficients (kappa, xi) at time t.
double two_qubit_concurrence_values(double kappa, double xi, int n_qubits,
                                    double b, double t);

double two_qubit_concurrence(const noise::SpectralModel& model, int n_qubits,
                             double t, double b,
                             const numerics::QuadratureSpec& spec = {});

// Two-qubit reduced density matrix (basis uu, ud, du, dd) of the collective
// CSS evolution; exposed for the enumeration cross-check.
Eigen::Matrix4cd two_qubit_reduced_css(double kappa, double xi, int n_qubits,
                                       double b, double t);

struct RuResult {
    std::complex<double> mean{0.0};
    double std_error_re = 0.0;
    double std_error_im = 0.0;
};

// Monte Carlo mean of e^{i (beta-alpha).Phi} over Gaussian phase vectors with
// covariance 2 kappa(t); converges to e^{-gamma(pair)}. Requires vartheta = 0
// and kappa positive semidefinite.
RuResult ru_decay_oracle(const BasisPair& pair,
                         const coefficients::CoefficientSet& coeffs,
                         std::size_t samples, rng::RngStream stream);

struct InitialState {
    enum class Kind { css, oats, ghz };
    Kind kind = Kind::css;
    double theta = 0.0; // oats squeezing angle
    double beta = 0.0;  // oats rotation angle
};

struct ExactMoments {
    double jy_mean = 0.0;
    double jy2_mean = 0.0;
    double d_jy_mean_db = 0.0;
};

// <J_y>, <J_y^2> and the analytic b-derivative of <J_y> by full z-basis
// enumeration (N <= 14).
ExactMoments exact_expectations(const InitialState& state,
                                const coefficients::CoefficientSet& coeffs,
                                double b, double t);

} // namespace qramsey::dynamics
