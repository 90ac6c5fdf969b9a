#include <doctest.h>

#include "qramsey/numerics.hpp"
#include "qramsey/rng.hpp"

#include <cmath>
#include <vector>

using namespace qramsey::numerics;

TEST_CASE("semi-infinite quadrature: exponential and gaussian moments") {
    QuadratureSpec spec;
    CHECK(integrate_semi_infinite([](double w) { return std::exp(-w); }, spec, 1.0) ==
          doctest::Approx(1.0).epsilon(1e-10));
    CHECK(integrate_semi_infinite([](double w) { return w * w * w * std::exp(-w * w); },
                                  spec, 1.0) == doctest::Approx(0.5).epsilon(1e-10));
}

TEST_CASE("quadrature matches a series oracle for the filtered integrand") {
    // Int_0^inf w^3 e^{-w} (1 - cos wt)/w^2 dw expanded term by term:
    // Int w^{2k+1} e^{-w} = (2k+1)!, so the series is sum (-1)^{k+1} t^{2k} (2k+1).
    const double t = 0.01;
    double series = 0.0;
    for (int k = 1; k <= 200; ++k) {
        series += (k % 2 == 1 ? 1.0 : -1.0) * std::pow(t, 2 * k) * (2 * k + 1);
    }
    QuadratureSpec spec;
    const double quad = integrate_semi_infinite(
        [&](double w) {
            return w * w * w * std::exp(-w) * (1.0 - std::cos(w * t)) / (w * w);
        },
        spec, 1.0);
    CHECK(quad == doctest::Approx(series).epsilon(1e-8));
}

TEST_CASE("quadrature of even polynomial times gaussian matches gamma values") {
    QuadratureSpec spec;
    for (int k = 1; k <= 4; ++k) {
        const double expect = 0.5 * gamma_fn(k + 0.5);
        const double got = integrate_semi_infinite(
            [&](double w) { return std::pow(w, 2 * k) * std::exp(-w * w); }, spec, 1.0);
        CHECK(got == doctest::Approx(expect).epsilon(1e-10));
    }
}

TEST_CASE("quadrature failure carries the achieved error") {
    QuadratureSpec spec;
    spec.max_subdivisions = 8;
    spec.relative_tolerance = 1e-14;
    spec.absolute_tolerance = 1e-300;
    bool threw = false;
    try {
        integrate_semi_infinite([](double w) { return std::cos(137.0 * w) * std::exp(-w); },
                                spec, 1.0);
    } catch (const QuadratureError& e) {
        threw = true;
        CHECK(e.achieved_error > 0.0);
    }
    CHECK(threw);
}

TEST_CASE("quadrature spec validation") {
    QuadratureSpec spec;
    spec.truncation_multiplier = 5.0;
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
    spec = {};
    spec.relative_tolerance = 0.0;
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
}

TEST_CASE("gamma function: factorials and poles") {
    CHECK(gamma_fn(4.0) == doctest::Approx(6.0).epsilon(1e-13));
    double fact = 1.0;
    for (int n = 1; n <= 15; ++n) {
        fact *= n;
        CHECK(gamma_fn(n + 1.0) == doctest::Approx(fact).epsilon(1e-12));
    }
    CHECK_THROWS_AS(gamma_fn(0.0), std::domain_error);
    CHECK_THROWS_AS(gamma_fn(-3.0), std::domain_error);
    // reflection values (used by the short-time cumulant constants)
    CHECK(gamma_fn(-2.5) == doctest::Approx(-8.0 * std::sqrt(M_PI) / 15.0).epsilon(1e-12));
}

TEST_CASE("hypergeometric series against brute-force oracles") {
    CHECK(hyp1f1(0.7, 1.3, 0.0) == doctest::Approx(1.0));
    // brute force 2F1(2, 2; 1/2; 1/4) with 1e4 terms
    double sum = 1.0, term = 1.0;
    for (int k = 0; k < 10000; ++k) {
        term *= (2.0 + k) * (2.0 + k) / (0.5 + k) * 0.25 / (k + 1.0);
        sum += term;
    }
    CHECK(hyp2f1(2.0, 2.0, 0.5, 0.25) == doctest::Approx(sum).epsilon(1e-12));
    // Kummer transform consistency at negative argument
    double direct = 1.0;
    term = 1.0;
    for (int k = 0; k < 10000; ++k) {
        term *= (0.8 + k) / (1.7 + k) * (-2.0) / (k + 1.0);
        direct += term;
    }
    CHECK(hyp1f1(0.8, 1.7, -2.0) == doctest::Approx(direct).epsilon(1e-12));
    CHECK_THROWS_AS(hyp2f1(1.0, 1.0, 0.5, 1.5), std::domain_error);
}

TEST_CASE("power-law fit: exact, constant, rescaled and noisy data") {
    std::vector<double> n = {10.0, 100.0, 1000.0};
    std::vector<double> y;
    for (double v : n) y.push_back(3.0 * std::pow(v, -0.25));
    auto fit = fit_power_law(n, y);
    CHECK(fit.exponent == doctest::Approx(-0.25).epsilon(1e-12));
    CHECK(fit.prefactor == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(fit.r_squared == doctest::Approx(1.0));

    std::vector<double> c = {4.0, 4.0, 4.0};
    fit = fit_power_law(n, c);
    CHECK(fit.exponent == doctest::Approx(0.0));
    CHECK(fit.prefactor == doctest::Approx(4.0));

    // rescaling invariance: exponent unchanged, prefactor scales linearly
    std::vector<double> y2(y);
    for (auto& v : y2) v *= 7.0;
    auto fit2 = fit_power_law(n, y2);
    CHECK(fit2.exponent == doctest::Approx(-0.25).epsilon(1e-9));
    CHECK(fit2.prefactor == doctest::Approx(7.0 * 3.0).epsilon(1e-9));

    // noisy synthetic recovery
    std::vector<double> nn, yy;
    const auto noise = qramsey::rng::sample_standard_normals({99, 0}, 24);
    for (int i = 0; i < 24; ++i) {
        const double v = 10.0 * std::pow(10.0, i / 8.0);
        nn.push_back(v);
        yy.push_back(std::pow(v, -0.75) * (1.0 + 0.01 * noise[i]));
    }
    auto fit3 = fit_power_law(nn, yy);
    CHECK(fit3.exponent == doctest::Approx(-0.75).epsilon(0.027));

    CHECK_THROWS_AS(fit_power_law(std::vector<double>{1.0, 2.0},
                                  std::vector<double>{1.0, 2.0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(fit_power_law(std::vector<double>{1.0, 2.0, 3.0},
                                  std::vector<double>{1.0, -2.0, 3.0}),
                    std::invalid_argument);
}

TEST_CASE("golden minimizer") {
    auto res = golden_minimize([](double x) { return (x - 2.0) * (x - 2.0); }, 0.0, 5.0,
                               1e-10);
    CHECK(res.x == doctest::Approx(2.0).epsilon(1e-8));
}

TEST_CASE("normal quantile") {
    CHECK(normal_quantile(0.5) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(normal_quantile(0.975) == doctest::Approx(1.959963985).epsilon(1e-6));
    CHECK(normal_quantile(0.8413447460685429) == doctest::Approx(1.0).epsilon(1e-6));
}
