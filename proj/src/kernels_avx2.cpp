// kernels_avx2.cpp — AVX2+FMA kernel variants (this TU is compiled with -mavx2 -mfma;
// callers must check avx2_available() before dispatching here)

#if defined(__x86_64__)

#include "qramsey/kernels.hpp"

#include <cassert>
#include <immintrin.h>

namespace qramsey::kernels {

double dot_avx2(std::span<const double> a, std::span<const double> b) {
    assert(a.size() == b.size());
    const std::size_t n = a.size();
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a.data() + i),
                               _mm256_loadu_pd(b.data() + i), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a.data() + i + 4),
                               _mm256_loadu_pd(b.data() + i + 4), acc1);
    }
    for (; i + 4 <= n; i += 4) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a.data() + i),
                               _mm256_loadu_pd(b.data() + i), acc0);
    }
    __m256d acc = _mm256_add_pd(acc0, acc1);
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double s = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
    for (; i < n; ++i) s += a[i] * b[i];
    return s;
}

double dot3_avx2(std::span<const double> a, std::span<const double> b,
                 std::span<const double> c) {
    assert(a.size() == b.size() && a.size() == c.size());
    const std::size_t n = a.size();
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d ab = _mm256_mul_pd(_mm256_loadu_pd(a.data() + i),
                                         _mm256_loadu_pd(b.data() + i));
        acc = _mm256_fmadd_pd(ab, _mm256_loadu_pd(c.data() + i), acc);
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double s = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
    for (; i < n; ++i) s += a[i] * b[i] * c[i];
    return s;
}

void axpy_avx2(double s, std::span<const double> a, std::span<double> out) {
    assert(a.size() == out.size());
    const std::size_t n = a.size();
    const __m256d vs = _mm256_set1_pd(s);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d r = _mm256_fmadd_pd(vs, _mm256_loadu_pd(a.data() + i),
                                          _mm256_loadu_pd(out.data() + i));
        _mm256_storeu_pd(out.data() + i, r);
    }
    for (; i < n; ++i) out[i] += s * a[i];
}

} // namespace qramsey::kernels

#endif // __x86_64__
