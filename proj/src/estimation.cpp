// estimation.cpp

#include "qramsey/estimation.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>

namespace qramsey::estimation {

using Complex = std::complex<double>;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// x^n for integer n with sign tracking; safe against pow() edge cases for
// negative bases and large exponents.
double pow_int(double x, long long n) {
    if (n == 0) return 1.0;
    if (x == 0.0) return n > 0 ? 0.0 : kInf;
    const double lg = static_cast<double>(n) * std::log(std::abs(x));
    if (lg > 709.0) return (x < 0.0 && (n & 1)) ? -kInf : kInf;
    if (lg < -745.0) return 0.0;
    const double mag = std::exp(lg);
    return (x < 0.0 && (n & 1)) ? -mag : mag;
}

} // namespace

double oats_initial_jy_variance(int n, double theta, double beta) {
    const double A = 1.0 - pow_int(std::cos(theta), n - 2);
    const double B = 4.0 * std::sin(0.5 * theta) * pow_int(std::cos(0.5 * theta), n - 2);
    const double delta = 0.5 * std::atan2(B, A);
    return 0.25 * n *
           (1.0 + 0.25 * (n - 1) * A +
            0.25 * (n - 1) * std::hypot(A, B) * std::cos(2.0 * beta + 2.0 * delta));
}

AngleResult optimal_angles(int n) {
    if (n < 3) throw std::invalid_argument("optimal_angles: N >= 3 required");
    AngleResult out;
    out.theta_asymptotic = std::pow(12.0, 1.0 / 6.0) * std::pow(2.0, 2.0 / 3.0) *
                           std::pow(n, -2.0 / 3.0);
    out.beta_asymptotic = 0.5 * M_PI - std::pow(3.0, -1.0 / 6.0) * std::pow(n, -1.0 / 3.0) -
                          0.5 * std::pow(3.0, 1.0 / 6.0) * std::pow(n, -2.0 / 3.0);

    // beta is optimal exactly at pi/2 - delta(theta); minimize the remaining
    // 1-D variance over theta around the asymptotic scale.
    const auto variance_at = [&](double theta) {
        const double A = 1.0 - pow_int(std::cos(theta), n - 2);
        const double B =
            4.0 * std::sin(0.5 * theta) * pow_int(std::cos(0.5 * theta), n - 2);
        return 0.25 * n * (1.0 + 0.25 * (n - 1) * (A - std::hypot(A, B)));
    };
    const double lo = std::max(1e-9, 0.05 * out.theta_asymptotic);
    const double hi = std::min(0.99 * M_PI, 20.0 * out.theta_asymptotic);
    const auto res = numerics::golden_minimize(
        [&](double lg) { return variance_at(std::exp(lg)); }, std::log(lo),
        std::log(hi), 1e-10);
    out.theta_opt = std::exp(res.x);
    out.min_variance = res.fx;
    out.A = 1.0 - pow_int(std::cos(out.theta_opt), n - 2);
    out.B = 4.0 * std::sin(0.5 * out.theta_opt) *
            pow_int(std::cos(0.5 * out.theta_opt), n - 2);
    out.delta = 0.5 * std::atan2(out.B, out.A);
    out.beta_opt = 0.5 * M_PI - out.delta;
    return out;
}

double css_uncertainty_collective(int n, double total_time, double chi, double psi,
                                  double t, bool zero_psi) {
    if (n < 2) throw std::invalid_argument("css_uncertainty_collective: N >= 2");
    if (!(t > 0.0) || !(total_time > 0.0))
        throw std::invalid_argument("css_uncertainty_collective: t, T must be positive");
    if (zero_psi) psi = 0.0;
    const double num = (n + 1) * std::exp(chi) -
                       (n - 1) * std::exp(-chi) * pow_int(std::cos(2.0 * psi), n - 2);
    // cos(psi)^{2N-2} has an even exponent; the formula stays finite on both
    // sides of cos(psi) = 0 and the dips at psi = k pi survive. The infinity
    // sentinel fires only where the denominator genuinely underflows.
    const double den = 2.0 * n * total_time * t * pow_int(std::cos(psi), 2LL * n - 2);
    const double val = num / den;
    if (!std::isfinite(val) || !(val > 0.0)) return kInf;
    return std::sqrt(val);
}

double css_uncertainty_even_odd(int n, double total_time, double chi_s,
                                double chi_d, double psi_s, double psi_d,
                                double t, bool zero_psi) {
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument("css_uncertainty_even_odd: even N >= 4");
    if (!(t > 0.0) || !(total_time > 0.0))
        throw std::invalid_argument("css_uncertainty_even_odd: t, T must be positive");
    if (zero_psi) psi_s = psi_d = 0.0;
    const long long half = n / 2;
    const double num1 =
        (n + 2) * std::exp(chi_s) -
        (n - 2) * std::exp(-chi_s) * pow_int(std::cos(2.0 * psi_s), half - 2) *
            pow_int(std::cos(2.0 * psi_d), half);
    const double num2 =
        std::exp(chi_d) * pow_int(std::cos(psi_s - psi_d), n - 2) -
        std::exp(-chi_d) * pow_int(std::cos(psi_s + psi_d), n - 2);
    const double den = total_time * t * pow_int(std::cos(psi_s), n - 2) *
                       pow_int(std::cos(psi_d), n);
    // The raw closed form carries a spurious global factor of 4 (its noiseless
    // limit is 4/(NTt)); normalize so chi = psi = 0 reproduces the SQL exactly
    // and x = 0 reproduces the collective formula pointwise.
    const double val = 0.25 * (num1 / n + num2) / den;
    if (!std::isfinite(val) || !(val > 0.0)) return kInf;
    return std::sqrt(val);
}

double css_uncertainty(const ProtocolConfig& config, double t, bool zero_psi,
                       const numerics::QuadratureSpec& spec) {
    if (config.state.kind != dynamics::InitialState::Kind::css)
        throw std::invalid_argument("css_uncertainty: state must be CSS");
    using Kind = coefficients::TransitGeometry::Kind;
    switch (config.geometry.kind) {
        case Kind::collective: {
            const auto c = coefficients::collective_values(config.model, t, spec);
            return css_uncertainty_collective(config.n_qubits, config.total_time,
                                              4.0 * c.kappa, 4.0 * c.xi, t, zero_psi);
        }
        case Kind::even_odd: {
            const auto c =
                coefficients::even_odd_values(config.model, config.geometry.x_eo, t, spec);
            return css_uncertainty_even_odd(config.n_qubits, config.total_time,
                                            4.0 * c.kappa_s, 4.0 * c.kappa_d,
                                            4.0 * c.xi_s, 4.0 * c.xi_d, t, zero_psi);
        }
        default:
            throw std::invalid_argument(
                "css_uncertainty: closed forms exist for collective and even-odd "
                "layouts only");
    }
}

namespace {

// Moments of the one-axis-twisted product state used by the cumulant
// expansion, for an M-qubit register.
struct TwistConstants {
    double X1 = 1.0;   // <sigma_x>
    double Y2 = 0.0;   // <sigma_z sigma'_y>
    double YY = 0.0;   // <sigma_y sigma'_y>
    double Wp = 0.0;   // off-diagonal <tilde-sigma tilde-sigma'>
    double jline = 0.0; // cos(beta) + sin(beta) (M-1) Y2
    double sb = 0.0, cb = 0.0, s2 = 0.0, c2 = 0.0;
    int M = 0;
};

TwistConstants twist_constants(int M, double theta, double beta) {
    TwistConstants c;
    c.M = M;
    c.X1 = pow_int(std::cos(0.5 * theta), M - 1);
    c.Y2 = std::sin(0.5 * theta) * pow_int(std::cos(0.5 * theta), M - 2);
    c.YY = 0.5 * (1.0 - pow_int(std::cos(theta), M - 2));
    c.sb = std::sin(beta);
    c.cb = std::cos(beta);
    c.s2 = std::sin(0.5 * beta) * std::sin(0.5 * beta);
    c.c2 = std::cos(0.5 * beta) * std::cos(0.5 * beta);
    c.Wp = c.sb * c.sb * c.YY + 2.0 * c.cb * c.sb * c.Y2;
    c.jline = c.cb + c.sb * (M - 1) * c.Y2;
    return c;
}

// exp{-1/2 [ theta^2 M (u+v)^2/16 + var + sigma theta ((S/2)((u+v) jline
//            + i(v-u) sb X1)) ]}
Complex ordered_moment(const TwistConstants& c, double theta, int sigma, int u,
                       int v, double row_sum, double var) {
    const double uv = u + v;
    const double re = -0.5 * (theta * theta * c.M * uv * uv / 16.0 + var +
                              sigma * theta * 0.5 * row_sum * uv * c.jline);
    const double im =
        -0.5 * sigma * theta * 0.5 * row_sum * (v - u) * c.sb * c.X1;
    return std::exp(Complex(re, im));
}

struct SiteSums {
    double chi_nn = 0.0;
    double S = 0.0; // sum_{k != n} Psi_nk
    double Q = 0.0; // sum_{k != n} Psi_nk^2
};

struct PairSums {
    double chi_nn = 0.0, chi_mm = 0.0, chi_nm = 0.0;
    double Sn = 0.0, Sm = 0.0, Qn = 0.0, Qm = 0.0;
    double Pnm = 0.0; // sum_{k != n,m} Psi_nk Psi_mk
    double psi_nm = 0.0;
};

// <sigma_y^n(t)> contribution and its b-derivative.
struct SiteResult {
    double jy = 0.0;
    double djy_db = 0.0;
};

SiteResult site_moment(const SiteSums& s, int n_qubits, double theta, double beta,
                       double b, double t) {
    const TwistConstants c = twist_constants(n_qubits - 1, theta, beta);
    const double var = s.Q + (s.S * s.S - s.Q) * c.Wp;

    const auto E = [&](int sigma, int u, int v) {
        return ordered_moment(c, theta, sigma, u, v, s.S, var);
    };
    const Complex i_sb4 = Complex(0.0, 0.25 * c.sb);
    const Complex t_minus = 0.5 * c.s2 * E(-1, 1, 1) + 0.5 * c.c2 * E(-1, -1, -1) +
                            i_sb4 * (E(-1, 1, -1) - E(-1, -1, 1));
    const Complex t_plus = 0.5 * c.s2 * E(1, -1, -1) + 0.5 * c.c2 * E(1, 1, 1) -
                           i_sb4 * (E(1, 1, -1) - E(1, -1, 1));
    const Complex em = std::exp(Complex(0.0, -b * t));
    const Complex ep = std::exp(Complex(0.0, b * t));
    const double decay = std::exp(-s.chi_nn);
    SiteResult out;
    out.jy = decay * (Complex(0.0, 1.0) * (em * t_minus - ep * t_plus)).real();
    out.djy_db = decay * t * (em * t_minus + ep * t_plus).real();
    return out;
}

// <sigma_y^n sigma_y^m (t)>.
double pair_moment(const PairSums& p, int n_qubits, double theta, double beta,
                   double b, double t) {
    const TwistConstants c = twist_constants(n_qubits - 2, theta, beta);

    // c-vectors Psi_n +/- Psi_m restricted to k outside {n, m}
    const double sum_p = (p.Sn - p.psi_nm) + (p.Sm - p.psi_nm);
    const double sum_m = (p.Sn - p.psi_nm) - (p.Sm - p.psi_nm);
    const double sq_base = (p.Qn - p.psi_nm * p.psi_nm) + (p.Qm - p.psi_nm * p.psi_nm);
    const double sq_p = sq_base + 2.0 * p.Pnm;
    const double sq_m = sq_base - 2.0 * p.Pnm;
    const double var_p = sq_p + (sum_p * sum_p - sq_p) * c.Wp;
    const double var_m = sq_m + (sum_m * sum_m - sq_m) * c.Wp;

    // Rotated ladder operators, entries indexed by spins (a, b) in {+1, -1}.
    const Complex isb2 = Complex(0.0, 0.5 * c.sb);
    Complex Lm[2][2], Lp[2][2]; // index 0 <-> spin +1
    Lm[0][0] = isb2;  Lm[0][1] = c.s2;
    Lm[1][0] = c.c2;  Lm[1][1] = -isb2;
    Lp[0][0] = -isb2; Lp[0][1] = c.c2;
    Lp[1][0] = c.s2;  Lp[1][1] = isb2;

    const auto Z = [&](int sigma, double row_sum, double var, const Complex (*Ln)[2],
                       const Complex (*Lmat)[2]) {
        Complex table[5][5]; // E indexed by (u+2)/2, (v+2)/2 over {-2,0,2}
        for (int iu = 0; iu < 3; ++iu)
            for (int iv = 0; iv < 3; ++iv)
                table[iu][iv] =
                    ordered_moment(c, theta, sigma, 2 * iu - 2, 2 * iv - 2, row_sum, var);
        Complex z{0.0};
        for (int an = 0; an < 2; ++an)
            for (int bn = 0; bn < 2; ++bn)
                for (int am = 0; am < 2; ++am)
                    for (int bm = 0; bm < 2; ++bm) {
                        const int sa_n = 1 - 2 * an, sb_n = 1 - 2 * bn;
                        const int sa_m = 1 - 2 * am, sb_m = 1 - 2 * bm;
                        const int u = sa_n + sa_m, v = -(sb_n + sb_m);
                        const Complex phase =
                            std::exp(Complex(0.0, 0.25 * theta * (sa_n * sa_m - sb_n * sb_m)));
                        z += 0.25 * Ln[an][bn] * Lmat[am][bm] * phase *
                             table[(u + 2) / 2][(v + 2) / 2];
                    }
        return z;
    };

    const Complex e2m = std::exp(Complex(0.0, -2.0 * b * t));
    const Complex e2p = std::exp(Complex(0.0, 2.0 * b * t));
    const Complex val =
        -std::exp(-2.0 * p.chi_nm) *
            (e2m * Z(-1, sum_p, var_p, Lm, Lm) + e2p * Z(1, sum_p, var_p, Lp, Lp)) +
        std::exp(2.0 * p.chi_nm) *
            (Z(-1, sum_m, var_m, Lm, Lp) + Z(1, sum_m, var_m, Lp, Lm));
    return std::exp(-p.chi_nn - p.chi_mm) * val.real();
}

} // namespace

MomentPair oats_moments(const Eigen::MatrixXd& chi, const Eigen::MatrixXd& psi,
                        double theta, double beta, double b, double t) {
    const int n = static_cast<int>(chi.rows());
    if (n < 4) throw std::invalid_argument("oats_moments: N >= 4 required");
    if (psi.rows() != n || chi.cols() != n || psi.cols() != n)
        throw std::invalid_argument("oats_moments: matrix shape mismatch");

    Eigen::MatrixXd psi0 = psi;
    psi0.diagonal().setZero();
    const Eigen::VectorXd S = psi0.rowwise().sum();
    const Eigen::VectorXd Q = psi0.cwiseProduct(psi0).rowwise().sum();
    const Eigen::MatrixXd P = psi0 * psi0.transpose();

    MomentPair out;
    for (int i = 0; i < n; ++i) {
        const auto r = site_moment({chi(i, i), S(i), Q(i)}, n, theta, beta, b, t);
        out.jy_mean += 0.5 * r.jy;
        out.d_jy_mean_db += 0.5 * r.djy_db;
    }
    double pairs = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            PairSums ps;
            ps.chi_nn = chi(i, i);
            ps.chi_mm = chi(j, j);
            ps.chi_nm = chi(i, j);
            ps.Sn = S(i);
            ps.Sm = S(j);
            ps.Qn = Q(i);
            ps.Qm = Q(j);
            ps.Pnm = P(i, j);
            ps.psi_nm = psi0(i, j);
            pairs += pair_moment(ps, n, theta, beta, b, t);
        }
    out.jy2_mean = 0.25 * n + 0.5 * pairs;
    return out;
}

MomentPair oats_moments_collective(double chi, double psi, int n, double theta,
                                   double beta, double b, double t) {
    if (n < 4) throw std::invalid_argument("oats_moments_collective: N >= 4");
    const auto site = site_moment({chi, (n - 1) * psi, (n - 1) * psi * psi}, n,
                                  theta, beta, b, t);
    PairSums ps;
    ps.chi_nn = ps.chi_mm = ps.chi_nm = chi;
    ps.Sn = ps.Sm = (n - 1) * psi;
    ps.Qn = ps.Qm = (n - 1) * psi * psi;
    ps.Pnm = (n - 2) * psi * psi;
    ps.psi_nm = psi;
    const double pair = pair_moment(ps, n, theta, beta, b, t);
    MomentPair out;
    out.jy_mean = 0.5 * n * site.jy;
    out.d_jy_mean_db = 0.5 * n * site.djy_db;
    out.jy2_mean = 0.25 * n + 0.25 * n * (n - 1.0) * pair;
    return out;
}

MomentPair oats_moments_even_odd(double chi_s, double chi_d, double psi_s,
                                 double psi_d, int n, double theta, double beta,
                                 double b, double t) {
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument("oats_moments_even_odd: even N >= 4");
    const double half = 0.5 * n;
    const double S = (half - 1) * psi_s + half * psi_d;
    const double Q = (half - 1) * psi_s * psi_s + half * psi_d * psi_d;
    const auto site = site_moment({chi_s, S, Q}, n, theta, beta, b, t);

    PairSums same;
    same.chi_nn = same.chi_mm = same.chi_nm = chi_s;
    same.Sn = same.Sm = S;
    same.Qn = same.Qm = Q;
    same.Pnm = (half - 2) * psi_s * psi_s + half * psi_d * psi_d;
    same.psi_nm = psi_s;

    PairSums diff;
    diff.chi_nn = diff.chi_mm = chi_s;
    diff.chi_nm = chi_d;
    diff.Sn = diff.Sm = S;
    diff.Qn = diff.Qm = Q;
    diff.Pnm = 2.0 * (half - 1) * psi_s * psi_d;
    diff.psi_nm = psi_d;

    const double corr_same = pair_moment(same, n, theta, beta, b, t);
    const double corr_diff = pair_moment(diff, n, theta, beta, b, t);

    MomentPair out;
    out.jy_mean = 0.5 * n * site.jy;
    out.d_jy_mean_db = 0.5 * n * site.djy_db;
    out.jy2_mean = 0.25 * n + 0.25 * (2.0 * half * (half - 1.0) * corr_same +
                                      2.0 * half * half * corr_diff);
    return out;
}

double propagate(const MomentPair& moments, double nu) {
    if (!(nu > 0.0)) throw std::invalid_argument("propagate: nu must be positive");
    double var = moments.jy2_mean - moments.jy_mean * moments.jy_mean;
    if (var < 0.0) {
        const double scale = std::max(1.0, std::abs(moments.jy2_mean));
        if (var > -1e-9 * scale)
            var = 0.0; // roundoff
        else
            return kInf; // outside the expansion's validity
    }
    const double slope = std::abs(moments.d_jy_mean_db);
    if (slope == 0.0) return kInf;
    return std::sqrt(var / nu) / slope;
}

UncertaintyCurve optimize_curve(const std::function<double(double)>& delta_b_of_t,
                                double t_lo, double t_hi, int grid_points) {
    if (!(t_lo > 0.0) || !(t_hi > t_lo))
        throw std::invalid_argument("optimize_curve: need 0 < t_lo < t_hi");
    if (grid_points < 2)
        throw std::invalid_argument("optimize_curve: need at least 2 grid points");
    UncertaintyCurve out;
    out.times.resize(grid_points);
    out.delta_b.resize(grid_points);
    const double la = std::log(t_lo), lb = std::log(t_hi);
    int best = -1;
    for (int i = 0; i < grid_points; ++i) {
        out.times[i] = std::exp(la + (lb - la) * i / (grid_points - 1.0));
        out.delta_b[i] = delta_b_of_t(out.times[i]);
        if (std::isfinite(out.delta_b[i]) &&
            (best < 0 || out.delta_b[i] < out.delta_b[best]))
            best = i;
    }
    if (best < 0)
        throw std::runtime_error("optimize_curve: no finite value on the grid");
    out.boundary_minimum = best == 0 || best == grid_points - 1;
    const double lo = out.times[std::max(0, best - 1)];
    const double hi = out.times[std::min(grid_points - 1, best + 1)];
    const auto res = numerics::golden_minimize(delta_b_of_t, lo, hi, 1e-6);
    out.tau_opt = res.x;
    out.delta_b_opt = res.fx;
    return out;
}

double oats_delta_b(const ProtocolConfig& config, double theta, double beta,
                    double t, const numerics::QuadratureSpec& spec) {
    using Kind = coefficients::TransitGeometry::Kind;
    const double b = config.b > 0.0 ? config.b : M_PI / t; // bt = pi operating point
    MomentPair m;
    switch (config.geometry.kind) {
        case Kind::collective: {
            const auto c = coefficients::collective_values(config.model, t, spec);
            m = oats_moments_collective(4.0 * c.kappa, 4.0 * c.xi, config.n_qubits,
                                        theta, beta, b, t);
            break;
        }
        case Kind::even_odd: {
            const auto c =
                coefficients::even_odd_values(config.model, config.geometry.x_eo, t, spec);
            m = oats_moments_even_odd(4.0 * c.kappa_s, 4.0 * c.kappa_d, 4.0 * c.xi_s,
                                      4.0 * c.xi_d, config.n_qubits, theta, beta, b, t);
            break;
        }
        case Kind::positions: {
            const auto coeffs =
                coefficients::dynamic_coefficients(config.model, config.geometry, t, spec);
            const auto dp = coefficients::decay_phase_map(coeffs);
            m = oats_moments(dp.chi, dp.psi, theta, beta, b, t);
            break;
        }
    }
    return propagate(m, config.total_time / t);
}

UncertaintyCurve optimize_time(const ProtocolConfig& config, double t_lo,
                               double t_hi, int grid_points,
                               const numerics::QuadratureSpec& spec) {
    using Kind = dynamics::InitialState::Kind;
    switch (config.state.kind) {
        case Kind::css:
            return optimize_curve(
                [&](double t) { return css_uncertainty(config, t, false, spec); }, t_lo,
                t_hi, grid_points);
        case Kind::oats: {
            double theta = config.state.theta, beta = config.state.beta;
            if (theta == 0.0 && beta == 0.0) {
                const auto a = optimal_angles(config.n_qubits);
                theta = a.theta_opt;
                beta = a.beta_opt;
            }
            return optimize_curve(
                [&](double t) { return oats_delta_b(config, theta, beta, t, spec); },
                t_lo, t_hi, grid_points);
        }
        case Kind::ghz:
            throw std::invalid_argument(
                "optimize_time: GHZ curves are produced by the randomized protocol "
                "module");
    }
    throw std::logic_error("optimize_time: unreachable");
}

} // namespace qramsey::estimation
