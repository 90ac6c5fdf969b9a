// kernels.hpp — dense reduction kernels with runtime-dispatched SIMD variants
//
// Scalar implementations are the reference; the AVX2+FMA variants are selected
// once at startup when the CPU supports them and are equivalence-tested against
// the scalar path. Accumulation order differs between variants (lane-wise
// partial sums), so agreement is to roundoff, not bitwise.

#pragma once

#include <cstddef>
#include <span>
#include <string_view>

namespace qramsey::kernels {

// sum_i a[i] * b[i]
double dot(std::span<const double> a, std::span<const double> b);

// sum_i a[i] * b[i] * c[i]
double dot3(std::span<const double> a, std::span<const double> b,
            std::span<const double> c);

// out[i] += s * a[i]
void axpy(double s, std::span<const double> a, std::span<double> out);

// Reference implementations (always available, used by equivalence tests).
double dot_scalar(std::span<const double> a, std::span<const double> b);
double dot3_scalar(std::span<const double> a, std::span<const double> b,
                   std::span<const double> c);
void axpy_scalar(double s, std::span<const double> a, std::span<double> out);

#if defined(__x86_64__)
double dot_avx2(std::span<const double> a, std::span<const double> b);
double dot3_avx2(std::span<const double> a, std::span<const double> b,
                 std::span<const double> c);
void axpy_avx2(double s, std::span<const double> a, std::span<double> out);
#endif

// "avx2" or "scalar", whichever dispatch selected at load time.
std::string_view backend_name();

// True when the AVX2 variants are compiled in and the CPU supports them.
bool avx2_available();

} // namespace qramsey::kernels
