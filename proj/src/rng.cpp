// rng.cpp

#include "qramsey/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace qramsey::rng {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
    x += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

} // namespace

Xoshiro256::Xoshiro256(RngStream stream) {
    std::uint64_t sm = stream.seed ^ (0xD1B54A32D192ED03ULL * (stream.stream_index + 1));
    for (auto& s : s_) s = splitmix64(sm);
    // splitmix64 never yields the all-zero state from distinct inputs, but be safe
    if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 1;
}

std::uint64_t Xoshiro256::next_u64() {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

double Xoshiro256::next_uniform01() {
    // 53 random bits mapped into (0, 1); never returns 0 (log-safe).
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double Xoshiro256::next_normal() {
    if (has_cached_) {
        has_cached_ = false;
        return cached_;
    }
    const double u1 = next_uniform01();
    const double u2 = next_uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * M_PI * u2;
    cached_ = r * std::sin(a);
    has_cached_ = true;
    return r * std::cos(a);
}

std::vector<double> sample_standard_normals(RngStream stream, std::size_t n) {
    if (n < 1) throw std::invalid_argument("sample_standard_normals: n must be >= 1");
    Xoshiro256 gen(stream);
    std::vector<double> out(n);
    for (auto& v : out) v = gen.next_normal();
    return out;
}

} // namespace qramsey::rng
