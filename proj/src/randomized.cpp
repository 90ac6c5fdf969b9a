// randomized.cpp
//
// Normalization note: the Monte Carlo paths and the eta = 0 reference curves
// use the randomized-protocol coefficient scale (cosine kernel without the
// angular doubling): kappa_rc = (1/4) Int J f cos(w t_nm), psi_rc = (1/8) Int
// J g cos(w t_nm); the GHZ decay is gamma = sum_nm kappa_rc / 2. These reduce
// exactly to the reference curves below as eta -> 0. The reduced-dynamics
// module keeps its own (angularly doubled) normalization.

#include "qramsey/randomized.hpp"

#include "qramsey/kernels.hpp"
#include "qramsey/rng.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qramsey::randomized {

using coefficients::CoefficientTable;
using coefficients::TransitGeometry;
using coefficients::cos_filter_kernel;
using coefficients::sin_filter_kernel;
using noise::SpectralModel;

void RcConfig::resolve(const SpectralModel& model) {
    const double scale = model.speed / model.omega_c;
    if (epsilon > 0.0 && eta > 0.0) {
        const double implied = scale / epsilon;
        if (std::abs(implied - eta) > 1e-9 * eta)
            throw std::invalid_argument(
                "RcConfig: epsilon and eta are inconsistent (eta = v/(epsilon w_c))");
    } else if (eta > 0.0) {
        epsilon = scale / eta;
    } else if (epsilon > 0.0) {
        eta = scale / epsilon;
    } else {
        throw std::invalid_argument("RcConfig: provide epsilon or eta");
    }
    if (n_samples < 1) throw std::invalid_argument("RcConfig: K must be >= 1");
    if (dimension < 1 || dimension > 3)
        throw std::invalid_argument("RcConfig: dimension must be 1, 2 or 3");
}

TransitGeometry sample_layout(int n_qubits, const RcConfig& rc,
                              const SpectralModel& model,
                              std::uint64_t layout_index) {
    RcConfig cfg = rc;
    cfg.resolve(model);
    const auto z = rng::sample_standard_normals({cfg.seed, layout_index},
                                                std::size_t(n_qubits) * cfg.dimension);
    std::vector<double> pos(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) pos[i] = cfg.epsilon * z[i];
    return TransitGeometry::from_positions(cfg.dimension, std::move(pos));
}

SpatialMeans spatial_means(const SpectralModel& model, const RcConfig& rc,
                           double t, const numerics::QuadratureSpec& spec) {
    model.validate();
    RcConfig cfg = rc;
    cfg.resolve(model);
    if (cfg.dimension != 1)
        throw std::invalid_argument("spatial_means: derived for dimension 1");
    const double q = cfg.eta * model.omega_c;
    const double spatial_scale = model.omega_c * std::min(1.0, 5.0 * cfg.eta);
    const auto local = [&](double w) {
        return noise::spectral_density(model, w) * cos_filter_kernel(w, t);
    };
    const auto spatial = [&](double w) {
        return local(w) * std::exp(-(w / q) * (w / q));
    };
    const auto spatial_xi = [&](double w) {
        return noise::spectral_density(model, w) * sin_filter_kernel(w, t) *
               std::exp(-(w / q) * (w / q));
    };
    SpatialMeans out;
    out.kappa0_bar = 0.5 * numerics::integrate_semi_infinite(local, spec, model.omega_c);
    out.kappa1_bar = 0.5 * numerics::integrate_semi_infinite(spatial, spec, spatial_scale);
    out.xi_bar = 0.5 * numerics::integrate_semi_infinite(spatial_xi, spec, spatial_scale);
    const double s = model.ohmicity;
    out.kappa0_sq_const = model.alpha * numerics::gamma_fn(0.5 * (s + 1.0)) / 8.0;
    out.xi0_cu_const = model.alpha * s * numerics::gamma_fn(0.5 * s) / 48.0;
    return out;
}

SecondCumulantIntegrals
spatial_second_cumulant_integrals(const SpectralModel& model, const RcConfig& rc,
                                  double t) {
    model.validate();
    RcConfig cfg = rc;
    cfg.resolve(model);
    if (cfg.dimension != 1)
        throw std::invalid_argument("spatial_second_cumulant_integrals: dimension 1 only");
    if (model.cutoff != noise::Cutoff::gaussian)
        throw std::invalid_argument(
            "spatial_second_cumulant_integrals: Gaussian cutoff required");
    const double q = cfg.eta * model.omega_c;
    const double q2 = q * q;
    // Tensor Gauss-Legendre grid; the l = 1 kernel rides a ridge of width ~q
    // along the diagonal so the panel size tracks q.
    const double upper = 8.0 * model.omega_c;
    const int panels =
        std::clamp(static_cast<int>(std::ceil(upper / (0.5 * q))), 16, 2048);
    static const double gx[4] = {0.1834346424956498, 0.5255324099163290,
                                 0.7966664774136267, 0.9602898564975363};
    static const double gw[4] = {0.3626837833783620, 0.3137066458778873,
                                 0.2223810344533745, 0.1012285362903763};
    std::vector<double> wnode, wj;
    const double h = upper / panels;
    for (int p = 0; p < panels; ++p) {
        const double c = (p + 0.5) * h;
        for (int j = 3; j >= 0; --j) {
            wnode.push_back(c - 0.5 * h * gx[j]);
            wj.push_back(0.5 * h * gw[j]);
        }
        for (int j = 0; j < 4; ++j) {
            wnode.push_back(c + 0.5 * h * gx[j]);
            wj.push_back(0.5 * h * gw[j]);
        }
    }
    const std::size_t nn = wnode.size();
    std::vector<double> wf(nn), wg(nn);
    for (std::size_t i = 0; i < nn; ++i) {
        const double j = wj[i] * noise::spectral_density(model, wnode[i]);
        wf[i] = j * cos_filter_kernel(wnode[i], t) *
                noise::thermal_factor(model, wnode[i]);
        wg[i] = j * sin_filter_kernel(wnode[i], t);
    }
    SecondCumulantIntegrals out;
    for (std::size_t i = 0; i < nn; ++i) {
        const double wi = wnode[i];
        for (std::size_t j2 = 0; j2 < nn; ++j2) {
            const double wq = wnode[j2];
            const double sum_sq = (wi * wi + wq * wq) / q2;
            const double cross2 = 2.0 * wi * wq / q2;
            // e^{-sum} (cosh(c) - 1) assembled from plain exponentials so the
            // large-argument cosh never overflows.
            const double base = std::exp(-sum_sq);
            const double k1 = 0.5 * (std::exp(cross2 - sum_sq) +
                                     std::exp(-cross2 - sum_sq)) -
                              base;
            const double k2 = 0.5 * (std::exp(0.5 * cross2 - sum_sq) +
                                     std::exp(-0.5 * cross2 - sum_sq)) -
                              base;
            out.F1 += wf[i] * wf[j2] * k1;
            out.F2 += wf[i] * wf[j2] * k2;
            out.G1 += wg[i] * wg[j2] * k1;
            out.G2 += wg[i] * wg[j2] * k2;
            out.FG2 += wf[i] * wg[j2] * k2;
        }
    }
    out.F1 *= 0.25;
    out.F2 *= 0.25;
    out.G1 *= 0.25;
    out.G2 *= 0.25;
    out.FG2 *= 0.25;
    return out;
}

StateCumulants spatial_second_cumulants(const SpectralModel& model,
                                        const RcConfig& rc, double t,
                                        const dynamics::BasisPair& pair) {
    pair.validate();
    const auto ints = spatial_second_cumulant_integrals(model, rc, t);
    const int n = pair.size();
    const double m = pair.m();
    const double mp = pair.mprime();
    const double theta = pair.theta_ab();
    const double sh = std::sin(0.5 * theta);
    const double flips = n * sh * sh; // number of flipped sites
    const double dm = m - mp;
    const double sf = std::sin(theta);

    StateCumulants out;
    out.delta_gamma_sq = 32.0 * flips * (flips - 1.0) * ints.F1 +
                         64.0 * (flips - 2.0) * (dm * dm - flips) * ints.F2;
    out.delta_phi0_sq =
        4.0 * n * n * sf * sf * ints.G1 +
        8.0 * (2.0 * n * (m * m - 2.0 * m * mp * std::cos(theta) + mp * mp) -
               n * n * sf * sf) *
            ints.G2;
    out.cov_gamma_phi0 = 32.0 * (m * m - mp * mp) * (flips - 1.0) * ints.FG2;
    return out;
}

ValidityResult validity_check(const RcConfig& rc, int n_qubits, double t,
                              const SpectralModel& model) {
    RcConfig cfg = rc;
    cfg.resolve(model);
    ValidityResult out;
    const double wt2 = model.omega_c * t * model.omega_c * t;
    out.cond_i = cfg.eta * wt2 * n_qubits;
    out.cond_ii = std::pow(cfg.eta, model.ohmicity + 1.0) * wt2 *
                  static_cast<double>(n_qubits) * n_qubits;
    out.valid = out.cond_i < cfg.validity_threshold &&
                out.cond_ii < cfg.validity_threshold;
    return out;
}

double mean_decay_prediction(const SpectralModel& model, const RcConfig& rc,
                             double t, const dynamics::BasisPair& pair) {
    const auto means = spatial_means(model, rc, t);
    const int n = pair.size();
    const double sh = std::sin(0.5 * pair.theta_ab());
    const double flips = n * sh * sh;
    const double dm = pair.m() - pair.mprime();
    const double gamma_bar =
        4.0 * (flips * means.kappa0_bar + (dm * dm - flips) * means.kappa1_bar);
    return std::exp(-gamma_bar);
}

namespace {

// |sum_n d_n e^{i w_k r_n / v}|^2 accumulated on the table nodes.
void phase_power(const CoefficientTable& table, const SpectralModel& model,
                 const TransitGeometry& layout, std::span<const double> weights_d,
                 std::vector<double>& out) {
    const int nodes = table.nodes();
    out.assign(nodes, 0.0);
    std::vector<double> re(nodes, 0.0), im(nodes, 0.0);
    for (int i = 0; i < layout.n_qubits; ++i) {
        const double d = weights_d[i];
        if (d == 0.0) continue;
        const double rv = layout.positions[i] / model.speed;
        for (int k = 0; k < nodes; ++k) {
            const double arg = table.node(k) * rv;
            re[k] += d * std::cos(arg);
            im[k] += d * std::sin(arg);
        }
    }
    for (int k = 0; k < nodes; ++k) out[k] = re[k] * re[k] + im[k] * im[k];
}

double layout_u_max(const SpectralModel& model,
                    const std::vector<TransitGeometry>& layouts, double t_max) {
    double u = model.omega_c * t_max;
    for (const auto& g : layouts) {
        double lo = g.positions[0], hi = g.positions[0];
        for (double p : g.positions) {
            lo = std::min(lo, p);
            hi = std::max(hi, p);
        }
        u = std::max(u, model.omega_c * (hi - lo) / model.speed);
    }
    return u;
}

} // namespace

double sampled_gamma(const SpectralModel& model, const TransitGeometry& layout,
                     const dynamics::BasisPair& pair, double t) {
    pair.validate();
    if (pair.size() != layout.n_qubits)
        throw std::invalid_argument("sampled_gamma: size mismatch");
    if (layout.dimension != 1 || layout.kind != TransitGeometry::Kind::positions)
        throw std::invalid_argument("sampled_gamma: 1-D positional layout required");
    const CoefficientTable table(model, layout_u_max(model, {layout}, t));
    std::vector<double> wf;
    table.cos_kernel_weights(t, wf);
    std::vector<double> d(pair.size());
    for (int i = 0; i < pair.size(); ++i) d[i] = pair.alpha[i] - pair.beta[i];
    std::vector<double> power;
    phase_power(table, model, layout, d, power);
    // gamma = sum d_n d_m kappa_nm with kappa_nm = (1/4) Int J f * 2 cos(w t_nm)
    return 0.5 * kernels::dot(wf, power);
}

double ghz_eta0_delta_b(const SpectralModel& model, int n_qubits,
                        double total_time, double t) {
    const double s = model.ohmicity;
    const double k0sq = model.alpha * numerics::gamma_fn(0.5 * (s + 1.0)) / 8.0;
    const double wt = model.omega_c * t;
    return std::sqrt(std::exp(0.25 * n_qubits * k0sq * wt * wt)) /
           (n_qubits * std::sqrt(total_time * t));
}

double oats_eta0_delta_b(const SpectralModel& model, int n_qubits,
                         double total_time, double t) {
    const double s = model.ohmicity;
    const double k0sq = model.alpha * numerics::gamma_fn(0.5 * (s + 1.0)) / 8.0;
    const double wt = model.omega_c * t;
    const double var = n_qubits * (std::exp(k0sq * wt * wt) - 1.0) +
                       0.5 * std::pow(3.0, 2.0 / 3.0) * std::cbrt(double(n_qubits));
    return std::sqrt(var / (static_cast<double>(n_qubits) * n_qubits * total_time * t));
}

Eta0Optimum ghz_eta0_optimum(const SpectralModel& model, int n_qubits,
                             double total_time) {
    const double s = model.ohmicity;
    const double k0 = std::sqrt(model.alpha * numerics::gamma_fn(0.5 * (s + 1.0)) / 8.0);
    Eta0Optimum out;
    out.tau_opt = std::sqrt(2.0) / (k0 * std::sqrt(double(n_qubits)) * model.omega_c);
    out.delta_b_opt = ghz_eta0_delta_b(model, n_qubits, total_time, out.tau_opt);
    return out;
}

Eta0Optimum oats_eta0_optimum(const SpectralModel& model, int n_qubits,
                              double total_time) {
    const double s = model.ohmicity;
    const double k0 = std::sqrt(model.alpha * numerics::gamma_fn(0.5 * (s + 1.0)) / 8.0);
    const double guess = std::pow(3.0, 1.0 / 3.0) / std::sqrt(2.0) / k0 *
                         std::pow(double(n_qubits), -1.0 / 3.0) / model.omega_c;
    const auto res = numerics::golden_minimize(
        [&](double t) { return oats_eta0_delta_b(model, n_qubits, total_time, t); },
        0.2 * guess, 5.0 * guess, 1e-10);
    return {res.x, res.fx};
}

RcCurve ghz_rc(const SpectralModel& model, const RcConfig& rc, int n_qubits,
               double total_time, const std::vector<double>& t_grid) {
    model.validate();
    RcConfig cfg = rc;
    cfg.resolve(model);
    if (cfg.dimension != 1)
        throw std::invalid_argument("ghz_rc: Monte Carlo path supports dimension 1");
    if (t_grid.empty()) throw std::invalid_argument("ghz_rc: empty time grid");
    const int K = cfg.n_samples;

    std::vector<TransitGeometry> layouts;
    layouts.reserve(K);
    for (int i = 0; i < K; ++i)
        layouts.push_back(sample_layout(n_qubits, cfg, model, i));

    const double t_max = *std::max_element(t_grid.begin(), t_grid.end());
    const CoefficientTable table(model, layout_u_max(model, layouts, t_max));

    // Per-layout node power |sum_n e^{i w r_n}|^2 (all weights 1).
    std::vector<std::vector<double>> powers(K);
    const std::vector<double> ones(n_qubits, 1.0);
    for (int i = 0; i < K; ++i)
        phase_power(table, model, layouts[i], ones, powers[i]);

    RcCurve out;
    out.times = t_grid;
    out.delta_b.resize(t_grid.size());
    out.dispersion.resize(t_grid.size());
    out.reference.resize(t_grid.size());
    std::vector<double> wf;
    for (std::size_t ti = 0; ti < t_grid.size(); ++ti) {
        const double t = t_grid[ti];
        table.cos_kernel_weights(t, wf);
        double mean_y = 0.0, mean_y2 = 0.0;
        for (int i = 0; i < K; ++i) {
            // gamma = sum_nm kappa_rc / 2 = (1/8) Int J f |sum e^{iwr}|^2
            const double gamma = 0.125 * kernels::dot(wf, powers[i]);
            const double y = std::exp(gamma);
            mean_y += y;
            mean_y2 += y * y;
        }
        mean_y /= K;
        mean_y2 /= K;
        const double denom = n_qubits * std::sqrt(total_time * t);
        out.delta_b[ti] = std::sqrt(mean_y) / denom;
        if (K > 1) {
            const double var_y = std::max(0.0, (mean_y2 - mean_y * mean_y) * K / (K - 1.0));
            out.dispersion[ti] = std::sqrt(var_y / K) / (2.0 * std::sqrt(mean_y) * denom);
        }
        out.reference[ti] = ghz_eta0_delta_b(model, n_qubits, total_time, t);
    }
    return out;
}

RcCurve oats_rc(const SpectralModel& model, const RcConfig& rc, int n_qubits,
                double total_time, const std::vector<double>& t_grid) {
    model.validate();
    RcConfig cfg = rc;
    cfg.resolve(model);
    if (cfg.dimension != 1)
        throw std::invalid_argument("oats_rc: Monte Carlo path supports dimension 1");
    if (t_grid.empty()) throw std::invalid_argument("oats_rc: empty time grid");
    const int K = cfg.n_samples;
    const auto angles = estimation::optimal_angles(n_qubits);

    std::vector<TransitGeometry> layouts;
    layouts.reserve(K);
    for (int i = 0; i < K; ++i)
        layouts.push_back(sample_layout(n_qubits, cfg, model, i));
    const double t_max = *std::max_element(t_grid.begin(), t_grid.end());
    const CoefficientTable table(model, layout_u_max(model, layouts, t_max));
    const int nodes = table.nodes();

    // Cosine rows per layout and unordered pair.
    const int n_pairs = n_qubits * (n_qubits - 1) / 2;
    std::vector<std::vector<double>> rows(K);
    for (int i = 0; i < K; ++i) {
        rows[i].resize(static_cast<std::size_t>(n_pairs) * nodes);
        int p = 0;
        for (int a = 0; a < n_qubits; ++a)
            for (int b2 = a + 1; b2 < n_qubits; ++b2, ++p) {
                const double x = layouts[i].x_nm(model, a, b2);
                table.cosine_row(x, {rows[i].data() + std::size_t(p) * nodes,
                                     static_cast<std::size_t>(nodes)});
            }
    }

    RcCurve out;
    out.times = t_grid;
    out.delta_b.resize(t_grid.size());
    out.dispersion.resize(t_grid.size());
    out.reference.resize(t_grid.size());

    std::vector<double> wf, wg;
    Eigen::MatrixXd chi(n_qubits, n_qubits), psi(n_qubits, n_qubits);
    for (std::size_t ti = 0; ti < t_grid.size(); ++ti) {
        const double t = t_grid[ti];
        const double b = M_PI / t; // bt = pi operating point
        table.cos_kernel_weights(t, wf);
        table.sin_kernel_weights(t, wg);
        double sum_wf = 0.0, sum_wg = 0.0;
        for (double v : wf) sum_wf += v;
        for (double v : wg) sum_wg += v;
        const double chi_diag = 0.25 * sum_wf;
        const double psi_diag = 0.125 * sum_wg;

        double m1 = 0.0, m1_sq = 0.0, m2 = 0.0, m2_sq = 0.0;
        for (int i = 0; i < K; ++i) {
            int p = 0;
            for (int a = 0; a < n_qubits; ++a) {
                chi(a, a) = chi_diag;
                psi(a, a) = psi_diag;
            }
            for (int a = 0; a < n_qubits; ++a)
                for (int b2 = a + 1; b2 < n_qubits; ++b2, ++p) {
                    const std::span<const double> row{
                        rows[i].data() + std::size_t(p) * nodes,
                        static_cast<std::size_t>(nodes)};
                    chi(a, b2) = chi(b2, a) = CoefficientTable::kappa_rc(row, wf);
                    psi(a, b2) = psi(b2, a) = CoefficientTable::psi_rc(row, wg);
                }
            const auto m = estimation::oats_moments(chi, psi, angles.theta_opt,
                                                    angles.beta_opt, b, t);
            const double x1 = m.d_jy_mean_db;
            const double x2 = m.jy2_mean - m.jy_mean * m.jy_mean;
            m1 += x1;
            m1_sq += x1 * x1;
            m2 += x2;
            m2_sq += x2 * x2;
        }
        m1 /= K;
        m1_sq /= K;
        m2 /= K;
        m2_sq /= K;
        const double var_clamped = std::max(m2, 0.0);
        const double delta = std::sqrt(var_clamped * t / total_time) / std::abs(m1);
        out.delta_b[ti] = delta;
        if (K > 1) {
            const double s1 = std::max(0.0, (m1_sq - m1 * m1) * K / (K - 1.0));
            const double s2 = std::max(0.0, (m2_sq - m2 * m2) * K / (K - 1.0));
            const double d_dx2 =
                0.5 * std::sqrt(t / total_time) / (std::sqrt(var_clamped) * std::abs(m1));
            const double d_dx1 = delta / std::abs(m1);
            out.dispersion[ti] =
                std::sqrt(d_dx1 * d_dx1 * s1 / K + d_dx2 * d_dx2 * s2 / K);
        }
        out.reference[ti] = oats_eta0_delta_b(model, n_qubits, total_time, t);
    }
    return out;
}

long long required_samples(double sigma, double delta_e, double epsilon_conf) {
    if (!(delta_e > 0.0))
        throw std::invalid_argument("required_samples: delta_e must be positive");
    if (!(epsilon_conf > 0.0) || !(epsilon_conf < 1.0))
        throw std::invalid_argument("required_samples: confidence level in (0, 1)");
    if (sigma <= 0.0) return 1;
    const double z = numerics::normal_quantile(1.0 - 0.5 * epsilon_conf);
    const double k = std::ceil((z * sigma / delta_e) * (z * sigma / delta_e));
    return std::max(1LL, static_cast<long long>(k));
}

} // namespace qramsey::randomized
