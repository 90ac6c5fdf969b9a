// numerics.hpp — adaptive semi-infinite quadrature, special functions,
// log-log power-law fitting, and 1-D minimization

#pragma once

#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qramsey::numerics {

struct QuadratureSpec {
    double relative_tolerance = 1e-10;
    double absolute_tolerance = 1e-14;
    int max_subdivisions = 4000;
    double truncation_multiplier = 50.0; // upper limit as a multiple of scale

    void validate() const;
};

// Thrown when the adaptive scheme cannot reach the requested tolerance.
struct QuadratureError : std::runtime_error {
    QuadratureError(const std::string& msg, double achieved)
        : std::runtime_error(msg), achieved_error(achieved) {}
    double achieved_error;
};

// Integrates f over [0, inf), truncated at truncation_multiplier * scale.
// `breakpoints` (absolute abscissas, ascending) seed the initial subdivision;
// callers with oscillatory integrands pass multiples of pi/period there.
double integrate_semi_infinite(const std::function<double(double)>& f,
                               const QuadratureSpec& spec, double scale,
                               std::span<const double> breakpoints = {});

// Breakpoints at multiples of pi/u up to `upper` (empty when u*upper is small).
std::vector<double> oscillation_breakpoints(double u, double upper,
                                            std::size_t max_points = 4096);

// Gamma function; throws std::domain_error at the poles (non-positive integers).
double gamma_fn(double x);

// Confluent hypergeometric 1F1(a; b; z) for z <= 0 (via the Kummer transform)
// or small positive z (direct series).
double hyp1f1(double a, double b, double z);

// Gauss hypergeometric 2F1(a, b; c; z), |z| < 1, by direct series.
double hyp2f1(double a, double b, double c, double z);

struct PowerLawFit {
    double exponent = 0.0;
    double prefactor = 0.0;
    double r_squared = 0.0;
};

// Least squares on (ln n, ln y); requires >= 3 points, all n, y > 0.
PowerLawFit fit_power_law(std::span<const double> n, std::span<const double> y);

struct MinimizeResult {
    double x = 0.0;
    double fx = 0.0;
};

// Golden-section minimization of a unimodal f on [lo, hi] to relative
// tolerance rel_tol in x.
MinimizeResult golden_minimize(const std::function<double(double)>& f,
                               double lo, double hi, double rel_tol = 1e-8);

// Standard normal quantile (Acklam's rational approximation, |err| < 1e-8).
double normal_quantile(double p);

} // namespace qramsey::numerics
