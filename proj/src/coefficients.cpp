// coefficients.cpp

#include "qramsey/coefficients.hpp"

#include "qramsey/kernels.hpp"

#include <cmath>
#include <stdexcept>

namespace qramsey::coefficients {

using noise::SpectralModel;

TransitGeometry TransitGeometry::collective(int n) {
    TransitGeometry g;
    g.kind = Kind::collective;
    g.n_qubits = n;
    g.validate();
    return g;
}

TransitGeometry TransitGeometry::even_odd(int n, double x) {
    TransitGeometry g;
    g.kind = Kind::even_odd;
    g.n_qubits = n;
    g.x_eo = x;
    g.validate();
    return g;
}

TransitGeometry TransitGeometry::from_positions(int dimension,
                                                std::vector<double> flat_positions) {
    TransitGeometry g;
    g.kind = Kind::positions;
    g.dimension = dimension;
    if (dimension < 1 || flat_positions.size() % dimension != 0)
        throw std::invalid_argument("TransitGeometry: bad position array");
    g.n_qubits = static_cast<int>(flat_positions.size()) / dimension;
    g.positions = std::move(flat_positions);
    g.validate();
    return g;
}

void TransitGeometry::validate() const {
    if (n_qubits < 1) throw std::invalid_argument("TransitGeometry: need at least one qubit");
    if (kind == Kind::even_odd) {
        if (n_qubits % 2 != 0)
            throw std::invalid_argument("TransitGeometry: even-odd layout requires even N");
        if (x_eo < 0.0)
            throw std::invalid_argument("TransitGeometry: even-odd separation must be >= 0");
    }
    if (kind == Kind::positions &&
        positions.size() != static_cast<std::size_t>(n_qubits) * dimension)
        throw std::invalid_argument("TransitGeometry: position array size mismatch");
}

double TransitGeometry::x_nm(const SpectralModel& model, int n, int m) const {
    if (n == m) return 0.0;
    switch (kind) {
        case Kind::collective:
            return 0.0;
        case Kind::even_odd: {
            const int half = n_qubits / 2;
            const bool same = (n < half) == (m < half);
            return same ? 0.0 : x_eo;
        }
        case Kind::positions: {
            double d2 = 0.0;
            for (int k = 0; k < dimension; ++k) {
                const double d = positions[n * dimension + k] - positions[m * dimension + k];
                d2 += d * d;
            }
            return model.omega_c * std::sqrt(d2) / model.speed;
        }
    }
    return 0.0;
}

double cos_filter_kernel(double omega, double t) {
    const double wt = omega * t;
    if (std::abs(wt) < 1e-4) {
        const double wt2 = wt * wt;
        return 0.5 * t * t * (1.0 - wt2 / 12.0 + wt2 * wt2 / 360.0);
    }
    return (1.0 - std::cos(wt)) / (omega * omega);
}

double sin_filter_kernel(double omega, double t) {
    const double wt = omega * t;
    if (std::abs(wt) < 1e-4) {
        const double wt2 = wt * wt;
        return (t * t * t * omega / 6.0) * (1.0 - wt2 / 20.0 + wt2 * wt2 / 840.0);
    }
    return (wt - std::sin(wt)) / (omega * omega);
}

namespace {

std::vector<double> pair_breakpoints(const SpectralModel& model, double x, double t,
                                     const numerics::QuadratureSpec& spec) {
    const double upper = spec.truncation_multiplier * model.omega_c;
    const double u = std::max(std::abs(t), x / model.omega_c);
    return numerics::oscillation_breakpoints(u, upper);
}

} // namespace

double kappa_pair(const SpectralModel& model, double x, double t,
                  const numerics::QuadratureSpec& spec) {
    model.validate();
    if (x < 0.0) throw std::invalid_argument("kappa_pair: x must be >= 0");
    if (t < 0.0) throw std::invalid_argument("kappa_pair: t must be >= 0");
    if (t == 0.0) return 0.0;
    if (x > kDecorrelationX) return 0.0;
    const auto brk = pair_breakpoints(model, x, t, spec);
    const double tx = x / model.omega_c;
    const auto f = [&](double w) {
        return noise::spectral_density(model, w) * cos_filter_kernel(w, t) *
               noise::angular_factor(model.dimension, w * tx) *
               noise::thermal_factor(model, w);
    };
    return 0.25 * numerics::integrate_semi_infinite(f, spec, model.omega_c, brk);
}

double xi_pair(const SpectralModel& model, double x, double t,
               const numerics::QuadratureSpec& spec) {
    model.validate();
    if (x < 0.0) throw std::invalid_argument("xi_pair: x must be >= 0");
    if (t < 0.0) throw std::invalid_argument("xi_pair: t must be >= 0");
    if (t == 0.0) return 0.0;
    if (x > kDecorrelationX) return 0.0;
    const auto brk = pair_breakpoints(model, x, t, spec);
    const double tx = x / model.omega_c;
    const auto f = [&](double w) {
        return noise::spectral_density(model, w) * sin_filter_kernel(w, t) *
               noise::angular_factor(model.dimension, w * tx);
    };
    return 0.125 * numerics::integrate_semi_infinite(f, spec, model.omega_c, brk);
}

CollectiveCoeffs collective_values(const SpectralModel& model, double t,
                                   const numerics::QuadratureSpec& spec) {
    return {kappa_pair(model, 0.0, t, spec), xi_pair(model, 0.0, t, spec)};
}

EvenOddCoeffs even_odd_values(const SpectralModel& model, double x, double t,
                              const numerics::QuadratureSpec& spec) {
    EvenOddCoeffs out;
    out.kappa_s = kappa_pair(model, 0.0, t, spec);
    out.xi_s = xi_pair(model, 0.0, t, spec);
    out.kappa_d = x == 0.0 ? out.kappa_s : kappa_pair(model, x, t, spec);
    out.xi_d = x == 0.0 ? out.xi_s : xi_pair(model, x, t, spec);
    return out;
}

CoefficientSet dynamic_coefficients(const SpectralModel& model,
                                    const TransitGeometry& geometry, double t,
                                    const numerics::QuadratureSpec& spec) {
    geometry.validate();
    const int n = geometry.n_qubits;
    if (n > 4096)
        throw std::invalid_argument(
            "dynamic_coefficients: matrix path capped at N = 4096; use the scalar "
            "collective/even-odd value paths for large N");
    CoefficientSet out;
    out.t = t;
    out.kappa = Eigen::MatrixXd::Zero(n, n);
    out.xi = Eigen::MatrixXd::Zero(n, n);
    out.vartheta = Eigen::MatrixXd::Zero(n, n);

    switch (geometry.kind) {
        case TransitGeometry::Kind::collective: {
            const auto c = collective_values(model, t, spec);
            out.kappa.setConstant(c.kappa);
            out.xi.setConstant(c.xi);
            break;
        }
        case TransitGeometry::Kind::even_odd: {
            const auto c = even_odd_values(model, geometry.x_eo, t, spec);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    const bool same = geometry.x_nm(model, i, j) == 0.0;
                    out.kappa(i, j) = same ? c.kappa_s : c.kappa_d;
                    out.xi(i, j) = same ? c.xi_s : c.xi_d;
                }
            break;
        }
        case TransitGeometry::Kind::positions: {
            for (int i = 0; i < n; ++i)
                for (int j = i; j < n; ++j) {
                    const double x = geometry.x_nm(model, i, j);
                    const double k = kappa_pair(model, x, t, spec);
                    const double s = xi_pair(model, x, t, spec);
                    out.kappa(i, j) = out.kappa(j, i) = k;
                    out.xi(i, j) = out.xi(j, i) = s;
                }
            break;
        }
    }
    return out;
}

ShortTimeConstants short_time_constants(const SpectralModel& model, double x) {
    model.validate();
    if (model.cutoff != noise::Cutoff::exponential)
        throw std::invalid_argument(
            "short_time_constants: closed forms hold for the exponential cutoff; "
            "use the quadrature path (dynamic_coefficients at small t) otherwise");
    if (x < 0.0) throw std::invalid_argument("short_time_constants: x must be >= 0");
    const double s = model.ohmicity;
    const double a = model.alpha;
    const double at = std::atan(x);
    const double onepx2 = 1.0 + x * x;
    ShortTimeConstants out;
    out.kappa2 = a * numerics::gamma_fn(s + 1.0) / 4.0 * std::cos((s + 1.0) * at) /
                 std::pow(onepx2, 0.5 * (s + 1.0));
    out.xi3 = a * numerics::gamma_fn(s + 2.0) / 24.0 * std::cos((s + 2.0) * at) /
              std::pow(onepx2, 0.5 * s + 1.0);
    out.chi0_sq = a * numerics::gamma_fn(1.0 + s);
    out.psi0_cu = a * numerics::gamma_fn(s + 2.0) / 6.0;
    out.chi_d0_sq = 4.0 * out.kappa2;
    out.psi_d0_cu = 4.0 * out.xi3;
    return out;
}

DecayPhase decay_phase_map(const CoefficientSet& coeffs) {
    return {4.0 * coeffs.kappa, 4.0 * (coeffs.xi + coeffs.vartheta)};
}

namespace {

// 16-point Gauss-Legendre nodes/weights on [-1, 1] (positive half; symmetric).
constexpr double kGlX[8] = {
    0.0950125098376374, 0.2816035507792589, 0.4580167776572274,
    0.6178762444026438, 0.7554044083550030, 0.8656312023878318,
    0.9445750230732326, 0.9894009349916499};
constexpr double kGlW[8] = {
    0.1894506104550685, 0.1826034150449236, 0.1691565193950025,
    0.1495959888165767, 0.1246289712555339, 0.0951585116824928,
    0.0622535239386479, 0.0271524594117541};

} // namespace

CoefficientTable::CoefficientTable(const SpectralModel& model, double u_max)
    : model_(model) {
    model.validate();
    const double upper = (model.cutoff == noise::Cutoff::gaussian ? 10.0 : 45.0) *
                         model.omega_c;
    // Panel width chosen so the fastest oscillation advances by at most ~8 rad
    // per panel, which a 16-point rule resolves to full precision.
    const double u = std::max(u_max, 1.0) / model.omega_c;
    const int panels = std::clamp(static_cast<int>(std::ceil(upper * u / 8.0)), 16, 4000);
    omega_.reserve(16 * panels);
    w_j_.reserve(16 * panels);
    w_j_thermal_.reserve(16 * panels);
    const double h = upper / panels;
    const auto push_node = [&](double w, double gl_weight) {
        omega_.push_back(w);
        const double wj = gl_weight * noise::spectral_density(model_, w);
        w_j_.push_back(wj);
        w_j_thermal_.push_back(wj * noise::thermal_factor(model_, w));
    };
    for (int p = 0; p < panels; ++p) {
        const double c = (p + 0.5) * h;
        for (int j = 7; j >= 0; --j) { // ascending within the panel
            push_node(c - 0.5 * h * kGlX[j], 0.5 * h * kGlW[j]);
        }
        for (int j = 0; j < 8; ++j) {
            push_node(c + 0.5 * h * kGlX[j], 0.5 * h * kGlW[j]);
        }
    }
}

void CoefficientTable::cos_kernel_weights(double t, std::vector<double>& out) const {
    out.resize(omega_.size());
    for (std::size_t i = 0; i < omega_.size(); ++i)
        out[i] = w_j_thermal_[i] * cos_filter_kernel(omega_[i], t);
}

void CoefficientTable::sin_kernel_weights(double t, std::vector<double>& out) const {
    out.resize(omega_.size());
    for (std::size_t i = 0; i < omega_.size(); ++i)
        out[i] = w_j_[i] * sin_filter_kernel(omega_[i], t);
}

void CoefficientTable::cosine_row(double x, std::span<double> out) const {
    const double tx = x / model_.omega_c;
    for (std::size_t i = 0; i < omega_.size(); ++i) out[i] = std::cos(omega_[i] * tx);
}

double CoefficientTable::kappa_art(std::span<const double> cos_row,
                                   std::span<const double> cos_weights) {
    return 0.5 * kernels::dot(cos_row, cos_weights);
}

double CoefficientTable::xi_art(std::span<const double> cos_row,
                                std::span<const double> sin_weights) {
    return 0.25 * kernels::dot(cos_row, sin_weights);
}

double CoefficientTable::kappa_rc(std::span<const double> cos_row,
                                  std::span<const double> cos_weights) {
    return 0.25 * kernels::dot(cos_row, cos_weights);
}

double CoefficientTable::psi_rc(std::span<const double> cos_row,
                                std::span<const double> sin_weights) {
    return 0.125 * kernels::dot(cos_row, sin_weights);
}

double CoefficientTable::kappa_art_diag(std::span<const double> cos_weights) const {
    double s = 0.0;
    for (double w : cos_weights) s += w;
    return 0.5 * s;
}

double CoefficientTable::xi_art_diag(std::span<const double> sin_weights) const {
    double s = 0.0;
    for (double w : sin_weights) s += w;
    return 0.25 * s;
}

} // namespace qramsey::coefficients
