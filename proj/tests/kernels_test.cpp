#include <doctest.h>

#include "qramsey/kernels.hpp"
#include "qramsey/rng.hpp"

#include <vector>

using namespace qramsey;

TEST_CASE("simd kernels match the scalar reference") {
    for (std::size_t n : {1u, 3u, 4u, 7u, 64u, 1023u, 4096u}) {
        auto a = rng::sample_standard_normals({42, n}, n);
        auto b = rng::sample_standard_normals({43, n}, n);
        const double ref = kernels::dot_scalar(a, b);
        const double got = kernels::dot(a, b);
        CHECK(got == doctest::Approx(ref).epsilon(1e-13));
#if defined(__x86_64__)
        if (kernels::avx2_available()) {
            CHECK(kernels::dot_avx2(a, b) == doctest::Approx(ref).epsilon(1e-13));
        }
#endif
        auto c = rng::sample_standard_normals({44, n}, n);
        CHECK(kernels::dot3(a, b, c) ==
              doctest::Approx(kernels::dot3_scalar(a, b, c)).epsilon(1e-13));

        std::vector<double> out1(n, 1.0), out2(n, 1.0);
        kernels::axpy(0.37, a, out1);
        kernels::axpy_scalar(0.37, a, out2);
        for (std::size_t i = 0; i < n; ++i)
            CHECK(out1[i] == doctest::Approx(out2[i]).epsilon(1e-14));
    }
}

TEST_CASE("dot is bilinear") {
    auto a = rng::sample_standard_normals({7, 0}, 257);
    auto b = rng::sample_standard_normals({7, 1}, 257);
    std::vector<double> a2(a);
    for (auto& v : a2) v *= 2.5;
    CHECK(kernels::dot(a2, b) == doctest::Approx(2.5 * kernels::dot(a, b)));
}

TEST_CASE("backend reports a known name") {
    const auto name = kernels::backend_name();
    CHECK((name == "avx2" || name == "scalar"));
}
