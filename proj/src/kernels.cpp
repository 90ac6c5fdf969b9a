// kernels.cpp — scalar reference kernels and runtime dispatch

#include "qramsey/kernels.hpp"

#include <cassert>

namespace qramsey::kernels {

double dot_scalar(std::span<const double> a, std::span<const double> b) {
    assert(a.size() == b.size());
    double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
    std::size_t i = 0;
    const std::size_t n4 = a.size() & ~std::size_t(3);
    for (; i < n4; i += 4) {
        s0 += a[i] * b[i];
        s1 += a[i + 1] * b[i + 1];
        s2 += a[i + 2] * b[i + 2];
        s3 += a[i + 3] * b[i + 3];
    }
    double s = (s0 + s1) + (s2 + s3);
    for (; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double dot3_scalar(std::span<const double> a, std::span<const double> b,
                   std::span<const double> c) {
    assert(a.size() == b.size() && a.size() == c.size());
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i] * c[i];
    return s;
}

void axpy_scalar(double s, std::span<const double> a, std::span<double> out) {
    assert(a.size() == out.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += s * a[i];
}

namespace {

bool detect_avx2() {
#if defined(__x86_64__)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

const bool g_use_avx2 = detect_avx2();

} // namespace

bool avx2_available() { return g_use_avx2; }

std::string_view backend_name() { return g_use_avx2 ? "avx2" : "scalar"; }

double dot(std::span<const double> a, std::span<const double> b) {
#if defined(__x86_64__)
    if (g_use_avx2) return dot_avx2(a, b);
#endif
    return dot_scalar(a, b);
}

double dot3(std::span<const double> a, std::span<const double> b,
            std::span<const double> c) {
#if defined(__x86_64__)
    if (g_use_avx2) return dot3_avx2(a, b, c);
#endif
    return dot3_scalar(a, b, c);
}

void axpy(double s, std::span<const double> a, std::span<double> out) {
#if defined(__x86_64__)
    if (g_use_avx2) { axpy_avx2(s, a, out); return; }
#endif
    axpy_scalar(s, a, out);
}

} // namespace qramsey::kernels
