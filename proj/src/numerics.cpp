// numerics.cpp

#include "qramsey/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <queue>

namespace qramsey::numerics {

void QuadratureSpec::validate() const {
    if (!(relative_tolerance > 0.0) || !(absolute_tolerance > 0.0))
        throw std::invalid_argument("QuadratureSpec: tolerances must be positive");
    if (!(truncation_multiplier >= 10.0))
        throw std::invalid_argument("QuadratureSpec: truncation_multiplier must be >= 10");
    if (max_subdivisions < 1)
        throw std::invalid_argument("QuadratureSpec: max_subdivisions must be >= 1");
}

namespace {

// Gauss-Kronrod 15/7 nodes and weights on [-1, 1].
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469};

struct Segment {
    double a, b, value, error;
    bool operator<(const Segment& o) const { return error < o.error; }
};

Segment qk15(const std::function<double(double)>& f, double a, double b) {
    const double h = 0.5 * (b - a);
    const double c = 0.5 * (a + b);
    const double fc = f(c);
    double kron = kWgk[7] * fc;
    double gauss = kWg[3] * fc;
    for (int j = 0; j < 7; ++j) {
        const double x = h * kXgk[j];
        const double fsum = f(c - x) + f(c + x);
        kron += kWgk[j] * fsum;
        if (j % 2 == 1) gauss += kWg[j / 2] * fsum;
    }
    kron *= h;
    gauss *= h;
    return {a, b, kron, std::abs(kron - gauss)};
}

} // namespace

std::vector<double> oscillation_breakpoints(double u, double upper,
                                            std::size_t max_points) {
    std::vector<double> pts;
    if (!(u > 0.0) || !(upper > 0.0)) return pts;
    const double step = M_PI / u;
    if (step >= upper) return pts;
    const std::size_t count =
        std::min<std::size_t>(max_points, static_cast<std::size_t>(upper / step));
    pts.reserve(count);
    // When the oscillation is too fine to enumerate, space max_points evenly.
    const double eff = std::max(step, upper / static_cast<double>(max_points));
    for (double x = eff; x < upper; x += eff) pts.push_back(x);
    return pts;
}

double integrate_semi_infinite(const std::function<double(double)>& f,
                               const QuadratureSpec& spec, double scale,
                               std::span<const double> breakpoints) {
    spec.validate();
    if (!(scale > 0.0)) throw std::invalid_argument("integrate_semi_infinite: scale must be positive");
    const double upper = spec.truncation_multiplier * scale;

    // Initial grid: geometric seeds near zero so narrow features at the cutoff
    // scale are never missed, plus the caller's breakpoints.
    std::vector<double> grid = {0.0, scale / 64.0, scale / 16.0, scale / 4.0,
                                scale, 4.0 * scale, upper};
    for (double x : breakpoints)
        if (x > 0.0 && x < upper) grid.push_back(x);
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    std::priority_queue<Segment> segs;
    double total = 0.0, err = 0.0, resabs = 0.0;
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        Segment s = qk15(f, grid[i], grid[i + 1]);
        total += s.value;
        err += s.error;
        resabs += std::abs(s.value);
        segs.push(s);
    }

    int splits = static_cast<int>(grid.size()) - 1;
    // The roundoff floor keeps heavily cancelling (oscillatory) integrals from
    // demanding error estimates below what double accumulation can deliver.
    auto tol = [&] {
        return std::max({spec.absolute_tolerance,
                         spec.relative_tolerance * std::abs(total),
                         100.0 * std::numeric_limits<double>::epsilon() * resabs});
    };
    while (err > tol() && splits < spec.max_subdivisions) {
        Segment worst = segs.top();
        segs.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        Segment left = qk15(f, worst.a, mid);
        Segment right = qk15(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        err += left.error + right.error - worst.error;
        resabs += std::abs(left.value) + std::abs(right.value) - std::abs(worst.value);
        segs.push(left);
        segs.push(right);
        ++splits;
    }
    if (err > tol()) {
        char buf[160];
        std::snprintf(buf, sizeof(buf),
                      "integrate_semi_infinite: tolerance not reached after %d "
                      "subdivisions (error estimate %.3e)",
                      splits, err);
        throw QuadratureError(buf, err);
    }
    return total;
}

double gamma_fn(double x) {
    if (x <= 0.0 && x == std::floor(x))
        throw std::domain_error("gamma_fn: pole at non-positive integer argument");
    return std::tgamma(x);
}

namespace {

double hyp1f1_series(double a, double b, double z) {
    double term = 1.0, sum = 1.0;
    for (int k = 0; k < 100000; ++k) {
        term *= (a + k) * z / ((b + k) * (k + 1.0));
        sum += term;
        if (std::abs(term) < 1e-15 * std::abs(sum)) return sum;
    }
    throw std::runtime_error("hyp1f1: series did not converge");
}

} // namespace

double hyp1f1(double a, double b, double z) {
    if (b <= 0.0 && b == std::floor(b))
        throw std::domain_error("hyp1f1: b at a non-positive integer");
    if (z <= 0.0) {
        // Kummer transform: all series terms positive, no cancellation.
        return std::exp(z) * hyp1f1_series(b - a, b, -z);
    }
    if (z < 30.0) return hyp1f1_series(a, b, z);
    throw std::domain_error("hyp1f1: large positive argument unsupported");
}

double hyp2f1(double a, double b, double c, double z) {
    if (c <= 0.0 && c == std::floor(c))
        throw std::domain_error("hyp2f1: c at a non-positive integer");
    if (!(std::abs(z) < 1.0))
        throw std::domain_error("hyp2f1: series requires |z| < 1");
    double term = 1.0, sum = 1.0;
    for (int k = 0; k < 100000; ++k) {
        term *= (a + k) * (b + k) * z / ((c + k) * (k + 1.0));
        sum += term;
        if (std::abs(term) < 1e-15 * std::abs(sum)) return sum;
    }
    throw std::runtime_error("hyp2f1: series did not converge");
}

PowerLawFit fit_power_law(std::span<const double> n, std::span<const double> y) {
    if (n.size() != y.size())
        throw std::invalid_argument("fit_power_law: size mismatch");
    if (n.size() < 3)
        throw std::invalid_argument("fit_power_law: need at least 3 points");
    const std::size_t m = n.size();
    double sx = 0, sy = 0;
    std::vector<double> lx(m), ly(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (!(n[i] > 0.0) || !(y[i] > 0.0))
            throw std::invalid_argument("fit_power_law: all points must be positive");
        lx[i] = std::log(n[i]);
        ly[i] = std::log(y[i]);
        sx += lx[i];
        sy += ly[i];
    }
    const double mx = sx / m, my = sy / m;
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < m; ++i) {
        sxx += (lx[i] - mx) * (lx[i] - mx);
        sxy += (lx[i] - mx) * (ly[i] - my);
    }
    if (sxx == 0.0)
        throw std::invalid_argument("fit_power_law: abscissas are all equal");
    PowerLawFit fit;
    fit.exponent = sxy / sxx;
    fit.prefactor = std::exp(my - fit.exponent * mx);
    double ss_res = 0, ss_tot = 0;
    for (std::size_t i = 0; i < m; ++i) {
        const double pred = my + fit.exponent * (lx[i] - mx);
        ss_res += (ly[i] - pred) * (ly[i] - pred);
        ss_tot += (ly[i] - my) * (ly[i] - my);
    }
    fit.r_squared = ss_tot > 0.0 ? std::clamp(1.0 - ss_res / ss_tot, 0.0, 1.0) : 1.0;
    return fit;
}

MinimizeResult golden_minimize(const std::function<double(double)>& f,
                               double lo, double hi, double rel_tol) {
    const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = lo, b = hi;
    double x1 = b - phi * (b - a);
    double x2 = a + phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while ((b - a) > rel_tol * (std::abs(a) + std::abs(b)) * 0.5 && (b - a) > 1e-300) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - phi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + phi * (b - a);
            f2 = f(x2);
        }
    }
    return f1 <= f2 ? MinimizeResult{x1, f1} : MinimizeResult{x2, f2};
}

double normal_quantile(double p) {
    if (!(p > 0.0) || !(p < 1.0))
        throw std::domain_error("normal_quantile: p must lie in (0, 1)");
    // Acklam's rational approximation.
    static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                               -2.759285104469687e+02, 1.383577518672690e+02,
                               -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                               -1.556989798598866e+02, 6.680131188771972e+01,
                               -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                               4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                               2.445134137142996e+00, 3.754408661907416e+00};
    const double plow = 0.02425, phigh = 1.0 - plow;
    double x;
    if (p < plow) {
        const double q = std::sqrt(-2.0 * std::log(p));
        x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    } else if (p <= phigh) {
        const double q = p - 0.5, r = q * q;
        x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
            (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
    } else {
        const double q = std::sqrt(-2.0 * std::log(1.0 - p));
        x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    // One Halley refinement against erfc brings the error below 1e-10.
    const double e = 0.5 * std::erfc(-x / std::sqrt(2.0)) - p;
    const double u = e * std::sqrt(2.0 * M_PI) * std::exp(0.5 * x * x);
    x -= u / (1.0 + 0.5 * x * u);
    return x;
}

} // namespace qramsey::numerics
