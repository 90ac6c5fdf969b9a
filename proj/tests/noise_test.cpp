#include <doctest.h>

#include "qramsey/noise.hpp"
#include "qramsey/numerics.hpp"

#include <cmath>
#include <complex>

using namespace qramsey;
using noise::Cutoff;
using noise::SpectralModel;

namespace {
SpectralModel expo(double s = 3.0) {
    SpectralModel m;
    m.ohmicity = s;
    m.cutoff = Cutoff::exponential;
    return m;
}
SpectralModel gauss(double s = 3.0) {
    SpectralModel m;
    m.ohmicity = s;
    m.cutoff = Cutoff::gaussian;
    return m;
}
} // namespace

TEST_CASE("spectral density values and edge cases") {
    const auto m = expo();
    CHECK(noise::spectral_density(m, 1.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
    CHECK(noise::spectral_density(m, 0.0) == 0.0);
    CHECK_THROWS_AS(noise::spectral_density(m, -0.1), std::invalid_argument);
}

TEST_CASE("gaussian-cutoff spectral integral matches the gamma identity") {
    const auto m = gauss();
    numerics::QuadratureSpec spec;
    const double got = numerics::integrate_semi_infinite(
        [&](double w) { return noise::spectral_density(m, w); }, spec, 1.0);
    CHECK(got == doctest::Approx(0.5 * m.alpha).epsilon(1e-10)); // alpha wc^2 G(2)/2
}

TEST_CASE("cutoff kinds agree to first order at low frequency") {
    const auto me = expo();
    const auto mg = gauss();
    const double w = 1e-3;
    const double ratio =
        noise::spectral_density(mg, w) / noise::spectral_density(me, w);
    CHECK(std::abs(ratio - 1.0) < 2e-3);
}

TEST_CASE("filter functions: zeros, series limit, parity") {
    CHECK(noise::filter_functions(0.7, 0.0).f_plus == doctest::Approx(0.0));
    const double t = 1.3;
    CHECK(noise::filter_functions(2.0 * M_PI / t, t).f_plus ==
          doctest::Approx(0.0).epsilon(1e-12));

    // series oracle at wt = 1e-3
    const double w = 1.0, ts = 1e-3;
    const double wt = w * ts;
    const double series = ts * ts *
                          (1.0 - wt * wt / 12.0 + wt * wt * wt * wt / 360.0 -
                           std::pow(wt, 6) / 20160.0);
    CHECK(noise::filter_functions(w, ts).f_plus ==
          doctest::Approx(series).epsilon(1e-12));

    for (double omega : {0.3, 1.7, 9.2})
        for (double tt : {0.11, 0.9, 4.0}) {
            const auto fp = noise::filter_functions(omega, tt);
            const auto fm_t = noise::filter_functions(omega, -tt);
            const auto fm_w = noise::filter_functions(-omega, tt);
            CHECK(fp.f_plus == doctest::Approx(fm_t.f_plus).epsilon(1e-13));
            CHECK(fp.f_plus == doctest::Approx(fm_w.f_plus).epsilon(1e-13));
            CHECK(fp.f_minus.real() == doctest::Approx(fm_t.f_minus.real()).epsilon(1e-13));
            CHECK(fp.f_minus.imag() == doctest::Approx(-fm_t.f_minus.imag()).epsilon(1e-13));
            CHECK(fp.f_minus.imag() == doctest::Approx(-fm_w.f_minus.imag()).epsilon(1e-13));
        }
}

TEST_CASE("angular factor table") {
    CHECK(noise::angular_factor(1, 0.0) == doctest::Approx(2.0));
    CHECK(noise::angular_factor(2, 0.0) == doctest::Approx(2.0));
    CHECK(noise::angular_factor(3, 0.0) == doctest::Approx(4.0 * M_PI));
    CHECK(noise::angular_factor(3, M_PI) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(noise::angular_factor(2, 1e-8) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK_THROWS_AS(noise::angular_factor(1, -0.1), std::invalid_argument);
}

TEST_CASE("averaged correlator: closed form vs quadrature oracle") {
    auto m = gauss();
    const double eta = 0.05;
    numerics::QuadratureSpec spec;
    for (double t : {0.0, 5.0, 40.0, 200.0}) {
        const auto closed = noise::averaged_correlator(m, eta, t);
        // direct quadrature of Int J e^{-w^2/(eta wc)^2} e^{-iwt}; the closed
        // form drops the J-cutoff gaussian next to the much narrower spatial
        // one, so compare at its own accuracy scale.
        const double q = eta * m.omega_c;
        const auto re = numerics::integrate_semi_infinite(
            [&](double w) {
                return noise::spectral_density(m, w) * std::exp(-(w / q) * (w / q)) *
                       std::cos(w * t);
            },
            spec, q, numerics::oscillation_breakpoints(t, spec.truncation_multiplier * q));
        const auto im = -numerics::integrate_semi_infinite(
            [&](double w) {
                return noise::spectral_density(m, w) * std::exp(-(w / q) * (w / q)) *
                       std::sin(w * t);
            },
            spec, q, numerics::oscillation_breakpoints(t, spec.truncation_multiplier * q));
        CHECK(closed.real() == doctest::Approx(re).epsilon(3e-3));
        CHECK(std::abs(closed.imag() - im) < 3e-3 * std::abs(closed.real()) + 1e-12);
    }
}

TEST_CASE("averaged correlator: t = 0 value, bound, eta scaling, preconditions") {
    auto m = gauss();
    const double eta = 0.01;
    const auto c0 = noise::averaged_correlator(m, eta, 0.0);
    CHECK(c0.real() == doctest::Approx(0.5 * std::pow(eta, 4.0)).epsilon(1e-12));
    CHECK(c0.imag() == doctest::Approx(0.0));

    for (double t : {1.0, 10.0, 100.0, 1000.0}) {
        CHECK(std::abs(noise::averaged_correlator(m, eta, t)) <= c0.real() * (1.0 + 1e-9));
    }

    // eta^{s+1} scaling at fixed eta*wc*t
    const double t1 = 3.0 / (eta * m.omega_c);
    const auto a = noise::averaged_correlator(m, eta, t1);
    const auto b = noise::averaged_correlator(m, 2.0 * eta, 0.5 * t1);
    CHECK(std::abs(b) / std::abs(a) == doctest::Approx(std::pow(2.0, 4.0)).epsilon(1e-9));

    CHECK_THROWS_AS(noise::averaged_correlator(expo(), eta, 1.0), std::invalid_argument);
}
