// coefficients.hpp — dynamic decay/phase coefficient matrices kappa, xi,
// vartheta for collective, even-odd and positional qubit layouts, their
// short-time constants, and the chi/psi map

#pragma once

#include "qramsey/noise.hpp"
#include "qramsey/numerics.hpp"

#include <Eigen/Dense>

#include <vector>

namespace qramsey::coefficients {

struct TransitGeometry {
    enum class Kind { collective, even_odd, positions };

    Kind kind = Kind::collective;
    int n_qubits = 0;
    double x_eo = 0.0;             // even-odd dimensionless cluster separation
    int dimension = 1;             // spatial dimension of `positions`
    std::vector<double> positions; // flat, length n_qubits * dimension

    static TransitGeometry collective(int n);
    static TransitGeometry even_odd(int n, double x);
    static TransitGeometry from_positions(int dimension,
                                          std::vector<double> flat_positions);

    // Dimensionless transit separation x_nm = omega_c |r_n - r_m| / v.
    double x_nm(const noise::SpectralModel& model, int n, int m) const;

    void validate() const;
};

struct CoefficientSet {
    double t = 0.0;
    Eigen::MatrixXd kappa;    // symmetric
    Eigen::MatrixXd xi;       // symmetric
    Eigen::MatrixXd vartheta; // antisymmetric (identically zero here)

    int size() const { return static_cast<int>(kappa.rows()); }
};

// Scalar coefficient values for the structured regimes (no N x N storage).
struct CollectiveCoeffs {
    double kappa = 0.0;
    double xi = 0.0;
};

struct EvenOddCoeffs {
    double kappa_s = 0.0;
    double kappa_d = 0.0;
    double xi_s = 0.0;
    double xi_d = 0.0;
};

// Single pair coefficient at dimensionless separation x (x = 0: same site).
double kappa_pair(const noise::SpectralModel& model, double x, double t,
                  const numerics::QuadratureSpec& spec = {});
double xi_pair(const noise::SpectralModel& model, double x, double t,
               const numerics::QuadratureSpec& spec = {});

CollectiveCoeffs collective_values(const noise::SpectralModel& model, double t,
                                   const numerics::QuadratureSpec& spec = {});
EvenOddCoeffs even_odd_values(const noise::SpectralModel& model, double x,
                              double t, const numerics::QuadratureSpec& spec = {});

// Full matrices; intended for the exact small-N paths (n_qubits is capped).
CoefficientSet dynamic_coefficients(const noise::SpectralModel& model,
                                    const TransitGeometry& geometry, double t,
                                    const numerics::QuadratureSpec& spec = {});

// Cross-pair separations beyond this are treated as fully decorrelated.
inline constexpr double kDecorrelationX = 1e3;

// Filter kernels with series guards at small wt.
double cos_filter_kernel(double omega, double t); // (1 - cos wt)/w^2
double sin_filter_kernel(double omega, double t); // (wt - sin wt)/w^2

// Short-time constants for the exponential cutoff:
//   kappa_nm(t) ~ kappa2(x) (w_c t)^2,  xi_nm(t) ~ xi3(x) (w_c t)^3.
struct ShortTimeConstants {
    double kappa2 = 0.0;    // kappa^2(x)
    double xi3 = 0.0;       // xi^3(x)
    double chi0_sq = 0.0;   // 4 kappa^2(0) = alpha Gamma(1+s)
    double psi0_cu = 0.0;   // 4 xi^3(0) = alpha Gamma(s+2)/6
    double chi_d0_sq = 0.0; // 4 kappa^2(x)
    double psi_d0_cu = 0.0; // 4 xi^3(x)
};

ShortTimeConstants short_time_constants(const noise::SpectralModel& model,
                                        double x);

// chi = 4 kappa, psi = 4 (xi + vartheta).
struct DecayPhase {
    Eigen::MatrixXd chi;
    Eigen::MatrixXd psi;
};

DecayPhase decay_phase_map(const CoefficientSet& coeffs);

// Fixed-node tabulated evaluator for 1-D layouts. Shares one composite
// Gauss-Legendre rule across all pairs and times so the per-pair work reduces
// to a dense dot product (see kernels). Equivalence-tested against the
// adaptive quadrature path.
class CoefficientTable {
public:
    // u_max: largest dimensionless argument (max of w_c t and all x_nm).
    CoefficientTable(const noise::SpectralModel& model, double u_max);

    int nodes() const { return static_cast<int>(omega_.size()); }
    double node(int i) const { return omega_[i]; }

    // W_i * (1 - cos w_i t)/w_i^2 (thermal factor included) and
    // W_i * (w_i t - sin w_i t)/w_i^2, where W_i = gl_weight * J(w_i).
    void cos_kernel_weights(double t, std::vector<double>& out) const;
    void sin_kernel_weights(double t, std::vector<double>& out) const;

    // row_i = cos(w_i * x / omega_c) for a dimensionless separation x.
    void cosine_row(double x, std::span<double> out) const;

    // Convenience evaluations against precomputed buffers:
    //   kappa_nm = (1/4) f_D-weighted integral; D=1 doubles the cosine kernel.
    static double kappa_art(std::span<const double> cos_row,
                            std::span<const double> cos_weights);
    static double xi_art(std::span<const double> cos_row,
                         std::span<const double> sin_weights);
    // Randomized-protocol normalization (no angular doubling).
    static double kappa_rc(std::span<const double> cos_row,
                           std::span<const double> cos_weights);
    static double psi_rc(std::span<const double> cos_row,
                         std::span<const double> sin_weights);

    // Diagonal (x = 0) values without a row buffer.
    double kappa_art_diag(std::span<const double> cos_weights) const;
    double xi_art_diag(std::span<const double> sin_weights) const;

private:
    std::vector<double> omega_;
    std::vector<double> w_j_;         // gl weight * J(w)
    std::vector<double> w_j_thermal_; // gl weight * J(w) * coth(beta w/2)
    noise::SpectralModel model_;
};

} // namespace qramsey::coefficients
