// noise.hpp — bath definition: spectral density, Ramsey filter functions,
// angular transit factor, and the spatially averaged two-point correlator

#pragma once

#include <complex>
#include <limits>

namespace qramsey::noise {

enum class Cutoff { gaussian, exponential };

// Supra-ohmic bosonic bath J(w) = alpha * omega_c * (w/omega_c)^s * K(w, omega_c).
struct SpectralModel {
    double alpha = 1.0;
    double ohmicity = 3.0; // s
    Cutoff cutoff = Cutoff::exponential;
    double omega_c = 1.0;
    double speed = 1.0; // sound speed v
    double inv_temperature = std::numeric_limits<double>::infinity(); // beta
    int dimension = 1;

    void validate() const;
    bool zero_temperature() const { return std::isinf(inv_temperature); }
};

// J(w); w must be >= 0 (callers exploit evenness explicitly).
double spectral_density(const SpectralModel& model, double omega);

// First- and second-order free-evolution filter functions.
struct FilterPair {
    double f_plus = 0.0;               // 2(1 - cos wt)/w^2
    std::complex<double> f_minus{0.0}; // (1 - e^{iwt} + iwt)/w^2
};

FilterPair filter_functions(double omega, double t);

// Angular average of e^{ik.r} over directions at fixed |k|; u = Omega_k * t_nm.
double angular_factor(int dimension, double u);

// coth(beta w / 2), with the zero-temperature limit coth = 1.
double thermal_factor(const SpectralModel& model, double omega);

// Spatially averaged two-point bath correlator for the 1-D randomized layout
// (Gaussian cutoff, low-temperature closed form), in units of omega_c^2.
std::complex<double> averaged_correlator(const SpectralModel& model, double eta,
                                         double t);

} // namespace qramsey::noise
