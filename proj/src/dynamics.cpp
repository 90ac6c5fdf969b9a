// dynamics.cpp

#include "qramsey/dynamics.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qramsey::dynamics {

using Complex = std::complex<double>;

double BasisPair::m() const {
    int s = 0;
    for (int a : alpha) s += a;
    return 0.5 * s;
}

double BasisPair::mprime() const {
    int s = 0;
    for (int b : beta) s += b;
    return 0.5 * s;
}

double BasisPair::theta_ab() const {
    int s = 0;
    for (std::size_t i = 0; i < alpha.size(); ++i) s += alpha[i] * beta[i];
    return std::acos(std::clamp(static_cast<double>(s) / size(), -1.0, 1.0));
}

void BasisPair::validate() const {
    if (alpha.size() != beta.size() || alpha.empty())
        throw std::invalid_argument("BasisPair: alpha/beta size mismatch");
    for (std::size_t i = 0; i < alpha.size(); ++i)
        if (std::abs(alpha[i]) != 1 || std::abs(beta[i]) != 1)
            throw std::invalid_argument("BasisPair: entries must be +1 or -1");
}

std::complex<double> ElementFactor::factor() const {
    return std::exp(Complex(-gamma, signal_phase + phi0 + phi1));
}

ElementFactor element_factor(const BasisPair& pair,
                             const coefficients::CoefficientSet& coeffs,
                             double b, double t) {
    pair.validate();
    const int n = pair.size();
    if (coeffs.size() != n)
        throw std::invalid_argument("element_factor: coefficient/pair size mismatch");
    ElementFactor out;
    double sum_diff = 0.0;
    for (int i = 0; i < n; ++i) sum_diff += pair.beta[i] - pair.alpha[i];
    out.signal_phase = 0.5 * b * t * sum_diff;
    for (int i = 0; i < n; ++i) {
        const double di = pair.alpha[i] - pair.beta[i];
        for (int j = 0; j < n; ++j) {
            const double dj = pair.alpha[j] - pair.beta[j];
            out.gamma += di * dj * coeffs.kappa(i, j);
            out.phi0 += (pair.beta[i] * pair.beta[j] - pair.alpha[i] * pair.alpha[j]) *
                        coeffs.xi(i, j);
            out.phi1 += (pair.beta[i] * pair.alpha[j] - pair.alpha[i] * pair.beta[j]) *
                        coeffs.vartheta(i, j);
        }
    }
    // Gram-matrix quadratic form; tiny negatives are quadrature roundoff.
    if (out.gamma < 0.0) {
        if (out.gamma < -1e-9)
            throw std::runtime_error("element_factor: negative decay exponent");
        out.gamma = 0.0;
    }
    return out;
}

GhzEvolution ghz_evolve(int n_qubits, const coefficients::CoefficientSet& coeffs,
                        double b, double t) {
    if (coeffs.size() != n_qubits)
        throw std::invalid_argument("ghz_evolve: coefficient size mismatch");
    GhzEvolution out;
    out.gamma_ghz = 4.0 * coeffs.kappa.sum();
    out.upper_coherence = 0.5 * std::exp(Complex(-out.gamma_ghz, -n_qubits * b * t));
    return out;
}

namespace {

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Structural QNI test per regime; weights must vanish for all coefficient values.
bool is_qni(QniRegime regime, int n, std::uint32_t ia, std::uint32_t ib) {
    // bit = 0 means spin +1
    const auto spin = [](std::uint32_t bits, int q) { return (bits >> q) & 1u ? -1 : 1; };
    switch (regime) {
        case QniRegime::general: {
            for (int p = 0; p < n; ++p)
                for (int q = p + 1; q < n; ++q) {
                    const int ap = spin(ia, p), aq = spin(ia, q);
                    const int bp = spin(ib, p), bq = spin(ib, q);
                    if (bp * bq != ap * aq) return false; // xi weight
                    if (bp * aq != ap * bq) return false; // vartheta weight
                }
            return true;
        }
        case QniRegime::collective: {
            const int m2a = n - 2 * __builtin_popcount(ia);  // 2m
            const int m2b = n - 2 * __builtin_popcount(ib);  // 2m'
            return m2a == m2b || m2a == -m2b;
        }
        case QniRegime::even_odd: {
            const int half = n / 2;
            const std::uint32_t lo = (1u << half) - 1u;
            const int me = half - 2 * __builtin_popcount(ia & lo);
            const int mo = (n - half) - 2 * __builtin_popcount(ia >> half);
            const int mpe = half - 2 * __builtin_popcount(ib & lo);
            const int mpo = (n - half) - 2 * __builtin_popcount(ib >> half);
            // 2m_e etc.; the factor 2 cancels in every weight below.
            if ((me * me - mpe * mpe) + (mo * mo - mpo * mpo) != 0) return false;
            if (me * mo != mpe * mpo) return false;
            if (me * mpo != mpe * mo) return false;
            return true;
        }
    }
    return false;
}

} // namespace

QniCounts qni_enumerate(QniRegime regime, int n_qubits) {
    if (n_qubits < 1 || n_qubits > 32)
        throw std::invalid_argument("qni_enumerate: N out of range");
    if (regime == QniRegime::even_odd && n_qubits % 2 != 0)
        throw std::invalid_argument("qni_enumerate: even-odd regime requires even N");
    QniCounts out;
    switch (regime) {
        case QniRegime::general:
            out.formula = 2LL << n_qubits; // 2^{N+1}
            break;
        case QniRegime::collective:
            out.formula = 2 * binomial(2 * n_qubits, n_qubits);
            break;
        case QniRegime::even_odd:
            out.formula = 2 * binomial(n_qubits, n_qubits / 2) *
                          binomial(n_qubits, n_qubits / 2);
            break;
    }
    if (n_qubits <= 12) {
        const std::uint32_t dim = 1u << n_qubits;
        long long count = 0;
        for (std::uint32_t ia = 0; ia < dim; ++ia)
            for (std::uint32_t ib = 0; ib < dim; ++ib)
                if (is_qni(regime, n_qubits, ia, ib)) ++count;
        out.enumerated = count;
        out.enumerated_valid = true;
    }
    return out;
}

Eigen::Matrix4cd two_qubit_reduced_css(double kappa, double xi, int n_qubits,
                                       double b, double t) {
    if (n_qubits < 2) throw std::invalid_argument("two_qubit_reduced_css: N >= 2");
    // Basis uu, ud, du, dd with spin values +1/-1; the N-2 traced qubits of the
    // +x CSS contribute a closed product because every element factor is a
    // phase linear in their total magnetization.
    const int spins[4][2] = {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
    Eigen::Matrix4cd rho;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            const int d = spins[r][0] + spins[r][1] - spins[c][0] - spins[c][1];
            const int ssum = spins[r][0] + spins[r][1] + spins[c][0] + spins[c][1];
            const double phase = -0.5 * b * t * d - xi * d * ssum;
            const double mag = 0.25 * std::exp(-kappa * d * d) *
                               std::pow(std::cos(2.0 * xi * d), n_qubits - 2);
            rho(r, c) = mag * std::exp(Complex(0.0, phase));
        }
    return rho;
}

namespace {

double wootters_concurrence(const Eigen::Matrix4cd& rho) {
    Eigen::Matrix4cd flip = Eigen::Matrix4cd::Zero();
    // sigma_y (x) sigma_y in the uu, ud, du, dd basis.
    flip(0, 3) = -1.0;
    flip(1, 2) = 1.0;
    flip(2, 1) = 1.0;
    flip(3, 0) = -1.0;
    const Eigen::Matrix4cd rho_tilde = flip * rho.conjugate() * flip;
    const Eigen::Matrix4cd prod = rho * rho_tilde;
    Eigen::ComplexEigenSolver<Eigen::Matrix4cd> solver(prod, false);
    std::array<double, 4> lam{};
    for (int i = 0; i < 4; ++i) {
        double v = solver.eigenvalues()(i).real();
        if (v < 1e-14) v = 0.0;
        lam[i] = std::sqrt(v);
    }
    std::sort(lam.begin(), lam.end(), std::greater<>());
    return std::max(0.0, lam[0] - lam[1] - lam[2] - lam[3]);
}

} // namespace

double two_qubit_concurrence_values(double kappa, double xi, int n_qubits,
                                    double b, double t) {
    return wootters_concurrence(two_qubit_reduced_css(kappa, xi, n_qubits, b, t));
}

double two_qubit_concurrence(const noise::SpectralModel& model, int n_qubits,
                             double t, double b,
                             const numerics::QuadratureSpec& spec) {
    const auto c = coefficients::collective_values(model, t, spec);
    return two_qubit_concurrence_values(c.kappa, c.xi, n_qubits, b, t);
}

RuResult ru_decay_oracle(const BasisPair& pair,
                         const coefficients::CoefficientSet& coeffs,
                         std::size_t samples, rng::RngStream stream) {
    pair.validate();
    const int n = pair.size();
    if (coeffs.size() != n)
        throw std::invalid_argument("ru_decay_oracle: coefficient size mismatch");
    if (coeffs.vartheta.cwiseAbs().maxCoeff() > 1e-12)
        throw std::invalid_argument("ru_decay_oracle: requires vartheta = 0");
    if (samples < 2) throw std::invalid_argument("ru_decay_oracle: samples >= 2");

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(2.0 * coeffs.kappa);
    Eigen::VectorXd lam = es.eigenvalues();
    for (int i = 0; i < n; ++i) {
        if (lam(i) < -1e-10)
            throw std::runtime_error("ru_decay_oracle: covariance not positive semidefinite");
        lam(i) = std::sqrt(std::max(lam(i), 0.0));
    }
    const Eigen::MatrixXd root = es.eigenvectors() * lam.asDiagonal() *
                                 es.eigenvectors().transpose();

    Eigen::VectorXd d(n);
    for (int i = 0; i < n; ++i) d(i) = pair.beta[i] - pair.alpha[i];
    const Eigen::VectorXd proj = root.transpose() * d; // phase = proj . z

    rng::Xoshiro256 gen(stream);
    double sum_re = 0.0, sum_im = 0.0, sum_re2 = 0.0, sum_im2 = 0.0;
    Eigen::VectorXd z(n);
    for (std::size_t k = 0; k < samples; ++k) {
        for (int i = 0; i < n; ++i) z(i) = gen.next_normal();
        const double phase = proj.dot(z);
        const double re = std::cos(phase), im = std::sin(phase);
        sum_re += re;
        sum_im += im;
        sum_re2 += re * re;
        sum_im2 += im * im;
    }
    const double inv = 1.0 / static_cast<double>(samples);
    RuResult out;
    out.mean = {sum_re * inv, sum_im * inv};
    const double var_re = std::max(0.0, sum_re2 * inv - out.mean.real() * out.mean.real());
    const double var_im = std::max(0.0, sum_im2 * inv - out.mean.imag() * out.mean.imag());
    out.std_error_re = std::sqrt(var_re * inv);
    out.std_error_im = std::sqrt(var_im * inv);
    return out;
}

namespace {

std::vector<Complex> build_state_vector(const InitialState& state, int n) {
    const std::size_t dim = std::size_t(1) << n;
    std::vector<Complex> psi(dim);
    switch (state.kind) {
        case InitialState::Kind::ghz: {
            std::fill(psi.begin(), psi.end(), Complex(0.0));
            psi[0] = M_SQRT1_2;
            psi[dim - 1] = M_SQRT1_2;
            break;
        }
        case InitialState::Kind::css:
        case InitialState::Kind::oats: {
            const double norm = std::pow(2.0, -0.5 * n);
            for (std::size_t idx = 0; idx < dim; ++idx) {
                const double m = 0.5 * (n - 2.0 * __builtin_popcountll(idx));
                const double twist = state.kind == InitialState::Kind::oats
                                         ? -0.5 * state.theta * m * m
                                         : 0.0;
                psi[idx] = norm * std::exp(Complex(0.0, twist));
            }
            if (state.kind == InitialState::Kind::oats && state.beta != 0.0) {
                // apply exp(-i beta Jx) qubit by qubit
                const Complex c = std::cos(0.5 * state.beta);
                const Complex ms = Complex(0.0, -std::sin(0.5 * state.beta));
                for (int q = 0; q < n; ++q) {
                    const std::size_t bit = std::size_t(1) << q;
                    for (std::size_t idx = 0; idx < dim; ++idx) {
                        if (idx & bit) continue;
                        const Complex up = psi[idx];
                        const Complex dn = psi[idx | bit];
                        psi[idx] = c * up + ms * dn;
                        psi[idx | bit] = ms * up + c * dn;
                    }
                }
            }
            break;
        }
    }
    return psi;
}

} // namespace

ExactMoments exact_expectations(const InitialState& state,
                                const coefficients::CoefficientSet& coeffs,
                                double b, double t) {
    const int n = coeffs.size();
    if (n < 1 || n > 14)
        throw std::invalid_argument(
            "exact_expectations: full enumeration supports N <= 14; use the "
            "analytic moment paths for larger systems");
    const std::size_t dim = std::size_t(1) << n;
    const auto psi = build_state_vector(state, n);

    const Eigen::MatrixXd& kappa = coeffs.kappa;
    const Eigen::MatrixXd& xi = coeffs.xi;
    const Eigen::MatrixXd& theta = coeffs.vartheta;
    const bool has_theta = theta.cwiseAbs().maxCoeff() > 0.0;

    Complex jy{0.0}, jy2{0.0}, djy{0.0};
    Eigen::VectorXd a(n), u(n), v(n);
    for (std::size_t idx = 0; idx < dim; ++idx) {
        const Complex amp = psi[idx];
        for (int q = 0; q < n; ++q) a(q) = (idx >> q) & 1u ? -1.0 : 1.0;
        u = xi * a;
        if (has_theta) v = theta * a;

        // single flips: <J_y>
        for (int q = 0; q < n; ++q) {
            const std::size_t jdx = idx ^ (std::size_t(1) << q);
            const Complex cross = amp * std::conj(psi[jdx]);
            if (cross == Complex(0.0)) continue;
            const double aq = a(q);
            const double gamma = 4.0 * kappa(q, q);
            double phase = -b * t * aq;
            phase += -4.0 * aq * u(q) + 4.0 * xi(q, q);
            if (has_theta) phase += -4.0 * aq * v(q);
            const Complex term =
                Complex(0.0, aq) * std::exp(Complex(-gamma, phase)) * cross;
            jy += term;
            djy += Complex(0.0, -aq * t) * term;
        }

        // double flips: <J_y^2>
        for (int p = 0; p < n; ++p) {
            const double ap = a(p);
            for (int q = p + 1; q < n; ++q) {
                const std::size_t jdx =
                    idx ^ (std::size_t(1) << p) ^ (std::size_t(1) << q);
                const Complex cross = amp * std::conj(psi[jdx]);
                if (cross == Complex(0.0)) continue;
                const double aq = a(q);
                const double gamma = 4.0 * kappa(p, p) + 4.0 * kappa(q, q) +
                                     8.0 * ap * aq * kappa(p, q);
                double phase = -b * t * (ap + aq);
                phase += -4.0 * ap * u(p) + 4.0 * xi(p, p) + 4.0 * ap * aq * xi(p, q) -
                         4.0 * aq * u(q) + 4.0 * xi(q, q) + 4.0 * aq * ap * xi(q, p);
                if (has_theta) phase += -4.0 * ap * v(p) - 4.0 * aq * v(q);
                jy2 += (-ap * aq) * std::exp(Complex(-gamma, phase)) * cross;
            }
        }
    }
    // The p<q loop covers each unordered pair once; both orders contribute equally.
    ExactMoments out;
    out.jy_mean = 0.5 * jy.real();
    out.jy2_mean = 0.25 * n + 0.25 * 2.0 * jy2.real();
    out.d_jy_mean_db = 0.5 * djy.real();
    return out;
}

} // namespace qramsey::dynamics
