#include <doctest.h>

#include "qramsey/dynamics.hpp"
#include "qramsey/rng.hpp"

#include <cmath>
#include <complex>

using namespace qramsey;
using dynamics::BasisPair;
using noise::SpectralModel;

namespace {

SpectralModel expo() {
    SpectralModel m;
    m.cutoff = noise::Cutoff::exponential;
    return m;
}

coefficients::CoefficientSet coeff_matrices(int n, double t, double kappa,
                                            double xi) {
    coefficients::CoefficientSet c;
    c.t = t;
    c.kappa = Eigen::MatrixXd::Constant(n, n, kappa);
    c.xi = Eigen::MatrixXd::Constant(n, n, xi);
    c.vartheta = Eigen::MatrixXd::Zero(n, n);
    return c;
}

coefficients::CoefficientSet random_coeffs(int n, std::uint64_t seed) {
    const auto z = rng::sample_standard_normals({seed, 0}, 2 * n * n + n);
    coefficients::CoefficientSet c;
    c.t = 1.0;
    Eigen::MatrixXd a(n, n), b(n, n), th(n, n);
    int k = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = z[k++];
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) b(i, j) = z[k++];
    c.kappa = a * a.transpose(); // positive semidefinite, symmetric
    c.xi = 0.5 * (b + b.transpose());
    th = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            th(i, j) = z[2 * n * n + ((i + j) % n)];
            th(j, i) = -th(i, j);
        }
    c.vartheta = th;
    return c;
}

BasisPair pair_from_bits(int n, unsigned a_bits, unsigned b_bits) {
    BasisPair p;
    p.alpha.resize(n);
    p.beta.resize(n);
    for (int i = 0; i < n; ++i) {
        p.alpha[i] = (a_bits >> i) & 1u ? -1 : 1;
        p.beta[i] = (b_bits >> i) & 1u ? -1 : 1;
    }
    return p;
}

} // namespace

TEST_CASE("element factor: diagonal pairs are inert") {
    const auto c = random_coeffs(5, 17);
    BasisPair p = pair_from_bits(5, 0b10110, 0b10110);
    const auto f = dynamics::element_factor(p, c, 0.7, 1.0);
    CHECK(f.gamma == 0.0);
    CHECK(f.phi0 == 0.0);
    CHECK(f.phi1 == 0.0);
    CHECK(f.signal_phase == 0.0);
    CHECK(std::abs(f.factor() - 1.0) == 0.0);
}

TEST_CASE("element factor: GHZ anti-diagonal") {
    const int n = 4;
    const auto c = random_coeffs(n, 5);
    BasisPair p = pair_from_bits(n, 0b0000, 0b1111);
    const double b = 0.9, t = 1.3;
    const auto f = dynamics::element_factor(p, c, b, t);
    CHECK(f.gamma == doctest::Approx(4.0 * c.kappa.sum()).epsilon(1e-12));
    CHECK(f.phi0 == doctest::Approx(0.0));
    CHECK(f.phi1 == doctest::Approx(0.0));
    CHECK(f.signal_phase == doctest::Approx(-n * b * t));
}

TEST_CASE("element factor: collective two-qubit decoherence-free pair") {
    const auto c = coeff_matrices(2, 1.0, 0.37, 0.11);
    BasisPair p = pair_from_bits(2, 0b01, 0b10); // (+,-) vs (-,+)
    const auto f = dynamics::element_factor(p, c, 0.0, 1.0);
    CHECK(f.gamma == doctest::Approx(0.0));
    CHECK(std::abs(f.factor()) == doctest::Approx(1.0));
}

TEST_CASE("element factor: size mismatch rejected") {
    const auto c = random_coeffs(3, 2);
    BasisPair p = pair_from_bits(4, 0, 1);
    CHECK_THROWS_AS(dynamics::element_factor(p, c, 0.0, 1.0), std::invalid_argument);
}

TEST_CASE("purity decays monotonically while kappa grows") {
    const auto m = expo();
    BasisPair p = pair_from_bits(3, 0b000, 0b101);
    double prev = 1.0;
    for (double t : {0.1, 0.3, 0.6, 0.9, 1.2, 1.5}) {
        const auto g = coefficients::TransitGeometry::collective(3);
        const auto c = coefficients::dynamic_coefficients(m, g, t);
        const double mag = std::abs(dynamics::element_factor(p, c, 0.4, t).factor());
        CHECK(mag <= prev + 1e-12);
        prev = mag;
    }
}

TEST_CASE("GHZ phases vanish for arbitrary coefficient draws") {
    for (int n : {2, 3, 5}) {
        for (std::uint64_t seed = 0; seed < 334; ++seed) {
            const auto c = random_coeffs(n, 1000 * n + seed);
            BasisPair p = pair_from_bits(n, 0u, (1u << n) - 1u);
            const auto f = dynamics::element_factor(p, c, 0.3, 0.8);
            CHECK(f.phi0 == doctest::Approx(0.0).epsilon(1e-12));
            CHECK(f.phi1 == doctest::Approx(0.0).epsilon(1e-12));
        }
    }
}

TEST_CASE("ghz evolution") {
    const int n = 5;
    auto c = coeff_matrices(n, 0.0, 0.0, 0.0);
    auto g0 = dynamics::ghz_evolve(n, c, 0.3, 0.0);
    CHECK(g0.gamma_ghz == 0.0);
    CHECK(std::abs(g0.upper_coherence) == doctest::Approx(0.5));

    const double kappa = 0.02;
    c = coeff_matrices(n, 0.5, kappa, 0.004);
    const auto g1 = dynamics::ghz_evolve(n, c, 0.3, 0.5);
    CHECK(g1.gamma_ghz == doctest::Approx(4.0 * n * n * kappa).epsilon(1e-12));
    CHECK(std::arg(g1.upper_coherence) ==
          doctest::Approx(std::remainder(-n * 0.3 * 0.5, 2.0 * M_PI)).epsilon(1e-12));

    // spatially uncorrelated limit: diagonal kappa
    coefficients::CoefficientSet d = coeff_matrices(n, 0.5, 0.0, 0.0);
    d.kappa = Eigen::MatrixXd::Identity(n, n) * kappa;
    CHECK(dynamics::ghz_evolve(n, d, 0.0, 0.5).gamma_ghz ==
          doctest::Approx(4.0 * n * kappa).epsilon(1e-12));
}

TEST_CASE("qni counts: formulas and enumeration") {
    const auto gen3 = dynamics::qni_enumerate(dynamics::QniRegime::general, 3);
    CHECK(gen3.formula == 16);
    CHECK(gen3.enumerated == 16);
    for (int n : {2, 4, 6, 8}) {
        const auto g = dynamics::qni_enumerate(dynamics::QniRegime::general, n);
        CHECK(g.enumerated == g.formula);
    }
    const auto coll2 = dynamics::qni_enumerate(dynamics::QniRegime::collective, 2);
    CHECK(coll2.formula == 12);
    CHECK(coll2.enumerated == 8); // the formula double-counts m = m' = 0 pairs
    const auto eo2 = dynamics::qni_enumerate(dynamics::QniRegime::even_odd, 2);
    CHECK(eo2.formula == 8);
    CHECK(eo2.enumerated == 8);
    const auto eo4 = dynamics::qni_enumerate(dynamics::QniRegime::even_odd, 4);
    CHECK(eo4.formula == 72);
    CHECK(eo4.enumerated == 56); // same double-count at m_e = m_o = 0
    const auto eo6 = dynamics::qni_enumerate(dynamics::QniRegime::even_odd, 6);
    CHECK(eo6.formula == 800);
    CHECK(eo6.enumerated == 800);
    CHECK_FALSE(dynamics::qni_enumerate(dynamics::QniRegime::general, 16).enumerated_valid);
    CHECK_THROWS_AS(dynamics::qni_enumerate(dynamics::QniRegime::even_odd, 5),
                    std::invalid_argument);
}

TEST_CASE("random-unitary oracle: exact cases") {
    const auto c = random_coeffs(4, 77);
    auto cz = c;
    cz.vartheta.setZero();
    BasisPair diag = pair_from_bits(4, 0b1010, 0b1010);
    const auto r = dynamics::ru_decay_oracle(diag, cz, 100, {1, 0});
    CHECK(r.mean.real() == doctest::Approx(1.0));
    CHECK(r.mean.imag() == doctest::Approx(0.0));

    auto zero = coeff_matrices(4, 1.0, 0.0, 0.0);
    BasisPair p = pair_from_bits(4, 0b0011, 0b0110);
    const auto rz = dynamics::ru_decay_oracle(p, zero, 100, {1, 0});
    CHECK(rz.mean.real() == doctest::Approx(1.0));

    CHECK_THROWS_AS(dynamics::ru_decay_oracle(p, c, 100, {1, 0}), std::invalid_argument);

    auto neg = coeff_matrices(4, 1.0, 0.0, 0.0);
    neg.kappa = -0.1 * Eigen::MatrixXd::Identity(4, 4);
    CHECK_THROWS_AS(dynamics::ru_decay_oracle(p, neg, 100, {1, 0}), std::runtime_error);
}

TEST_CASE("random-unitary oracle reproduces the exact decay") {
    for (int n : {4, 6}) {
        for (std::uint64_t trial = 0; trial < 10; ++trial) {
            auto c = random_coeffs(n, 300 + trial);
            c.vartheta.setZero();
            c.kappa *= 0.05; // keep e^{-gamma} well away from 0
            rng::Xoshiro256 gen({trial, 9});
            const unsigned a = static_cast<unsigned>(gen.next_u64() % (1u << n));
            unsigned b = static_cast<unsigned>(gen.next_u64() % (1u << n));
            if (a == b) b = a ^ 1u;
            BasisPair p = pair_from_bits(n, a, b);
            const auto f = dynamics::element_factor(p, c, 0.0, 1.0);
            const auto r = dynamics::ru_decay_oracle(p, c, 100000, {555 + trial, 1});
            const double expect = std::exp(-f.gamma);
            CHECK(std::abs(r.mean.real() - expect) < 3.0 * r.std_error_re + 1e-12);
            // 4 sigma: forty fixed-seed zero-mean checks make a 3 sigma tail likely
            CHECK(std::abs(r.mean.imag()) < 4.0 * r.std_error_im + 1e-12);
        }
    }
}

TEST_CASE("exact expectations: free precession and GHZ symmetry") {
    const int n = 6;
    auto zero = coeff_matrices(n, 0.0, 0.0, 0.0);
    dynamics::InitialState css;
    css.kind = dynamics::InitialState::Kind::css;
    const double t = 1.0, b = 0.5 * M_PI; // bt = pi/2
    const auto m = dynamics::exact_expectations(css, zero, b, t);
    CHECK(m.jy_mean == doctest::Approx(0.5 * n).epsilon(1e-12));

    dynamics::InitialState ghz;
    ghz.kind = dynamics::InitialState::Kind::ghz;
    const auto c = random_coeffs(n, 4242);
    const auto mg = dynamics::exact_expectations(ghz, c, 0.7, 0.9);
    CHECK(mg.jy_mean == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("trace is preserved by construction (diagonal factors are unity)") {
    const auto c = random_coeffs(4, 11);
    for (unsigned bits = 0; bits < 16; ++bits) {
        BasisPair p = pair_from_bits(4, bits, bits);
        CHECK(std::abs(dynamics::element_factor(p, c, 1.1, 2.2).factor() - 1.0) == 0.0);
    }
}

TEST_CASE("two-qubit reduced state matches full enumeration at N = 4") {
    const int n = 4;
    const double kappa = 0.03, xi = 0.07, b = 0.6, t = 0.8;
    const auto closed = dynamics::two_qubit_reduced_css(kappa, xi, n, b, t);

    const auto c = coeff_matrices(n, t, kappa, xi);
    Eigen::Matrix4cd brute = Eigen::Matrix4cd::Zero();
    const double rho0 = std::pow(2.0, -n);
    for (unsigned a = 0; a < 16; ++a)
        for (unsigned bb = 0; bb < 16; ++bb) {
            if ((a >> 2) != (bb >> 2)) continue; // traced qubits equal
            BasisPair p = pair_from_bits(n, a, bb);
            const auto f = dynamics::element_factor(p, c, b, t);
            // row/col indices in the uu, ud, du, dd order (bit set = down)
            const int row = ((a >> 0) & 1) * 2 + ((a >> 1) & 1);
            const int col = ((bb >> 0) & 1) * 2 + ((bb >> 1) & 1);
            brute(row, col) += rho0 * f.factor();
        }
    CHECK((brute - closed).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("concurrence: separable at t = 0, bounded in [0, 1]") {
    CHECK(dynamics::two_qubit_concurrence_values(0.0, 0.0, 100, 0.3, 0.0) ==
          doctest::Approx(0.0));
    const double c = dynamics::two_qubit_concurrence_values(0.001, 0.02, 100, 0.0, 0.5);
    CHECK(c >= 0.0);
    CHECK(c <= 1.0);
}

TEST_CASE("exact expectations rejects oversized systems") {
    auto c = coeff_matrices(15, 0.0, 0.0, 0.0);
    dynamics::InitialState css;
    CHECK_THROWS_AS(dynamics::exact_expectations(css, c, 0.0, 1.0),
                    std::invalid_argument);
}
