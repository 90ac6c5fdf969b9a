// noise.cpp

#include "qramsey/noise.hpp"

#include "qramsey/numerics.hpp"

#include <cmath>
#include <stdexcept>

namespace qramsey::noise {

void SpectralModel::validate() const {
    if (!(alpha > 0.0)) throw std::invalid_argument("SpectralModel: alpha must be positive");
    if (!(ohmicity > 1.0)) throw std::invalid_argument("SpectralModel: supra-ohmic s > 1 required");
    if (!(omega_c > 0.0)) throw std::invalid_argument("SpectralModel: omega_c must be positive");
    if (!(speed > 0.0)) throw std::invalid_argument("SpectralModel: speed must be positive");
    if (dimension < 1 || dimension > 3)
        throw std::invalid_argument("SpectralModel: dimension must be 1, 2 or 3");
    if (!zero_temperature() && !(inv_temperature > 0.0))
        throw std::invalid_argument("SpectralModel: inv_temperature must be positive or infinite");
}

double spectral_density(const SpectralModel& model, double omega) {
    if (omega < 0.0)
        throw std::invalid_argument("spectral_density: negative frequency");
    if (omega == 0.0) return 0.0;
    const double u = omega / model.omega_c;
    const double k = model.cutoff == Cutoff::gaussian ? std::exp(-u * u) : std::exp(-u);
    return model.alpha * model.omega_c * std::pow(u, model.ohmicity) * k;
}

FilterPair filter_functions(double omega, double t) {
    // f_minus = (1 - e^{iwt} + iwt)/w^2 = (1 - cos wt)/w^2 + i (wt - sin wt)/w^2.
    FilterPair out;
    const double wt = omega * t;
    if (std::abs(wt) < 1e-4) {
        // Series branches; the direct forms lose all digits to cancellation here.
        const double wt2 = wt * wt;
        const double half = 0.5 * t * t * (1.0 - wt2 / 12.0 + wt2 * wt2 / 360.0);
        out.f_plus = 2.0 * half;
        const double im = (t * t) * wt * (1.0 / 6.0 - wt2 / 120.0 + wt2 * wt2 / 5040.0);
        out.f_minus = {half, im};
        return out;
    }
    const double w2 = omega * omega;
    const double one_minus_cos = 1.0 - std::cos(wt);
    out.f_plus = 2.0 * one_minus_cos / w2;
    out.f_minus = {one_minus_cos / w2, (wt - std::sin(wt)) / w2};
    return out;
}

double angular_factor(int dimension, double u) {
    if (u < 0.0) throw std::invalid_argument("angular_factor: u must be >= 0");
    switch (dimension) {
        case 1:
            return 2.0 * std::cos(u);
        case 2:
        case 3: {
            double sinc;
            if (u < 1e-4) {
                const double u2 = u * u;
                sinc = 1.0 - u2 / 6.0 + u2 * u2 / 120.0;
            } else {
                sinc = std::sin(u) / u;
            }
            return dimension == 2 ? 2.0 * sinc : 4.0 * M_PI * sinc;
        }
        default:
            throw std::invalid_argument("angular_factor: dimension must be 1, 2 or 3");
    }
}

double thermal_factor(const SpectralModel& model, double omega) {
    if (model.zero_temperature()) return 1.0;
    const double x = 0.5 * model.inv_temperature * omega;
    if (x > 20.0) return 1.0;
    return 1.0 / std::tanh(x);
}

std::complex<double> averaged_correlator(const SpectralModel& model, double eta,
                                         double t) {
    model.validate();
    if (model.cutoff != Cutoff::gaussian)
        throw std::invalid_argument(
            "averaged_correlator: closed form requires a Gaussian cutoff");
    if (model.dimension != 1)
        throw std::invalid_argument("averaged_correlator: derived for dimension 1");
    if (!(eta > 0.0)) throw std::invalid_argument("averaged_correlator: eta must be positive");
    const double s = model.ohmicity;
    const double x = eta * model.omega_c * t;
    const double z = -0.25 * x * x;
    const double wc2 = model.omega_c * model.omega_c;
    const double re = numerics::gamma_fn(0.5 * (s + 1.0)) *
                      numerics::hyp1f1(0.5 * (s + 1.0), 0.5, z);
    const double im = -x * numerics::gamma_fn(0.5 * s + 1.0) *
                      numerics::hyp1f1(0.5 * (s + 2.0), 1.5, z);
    const double pref = 0.5 * model.alpha * std::pow(eta, s + 1.0) * wc2;
    return {pref * re, pref * im};
}

} // namespace qramsey::noise
