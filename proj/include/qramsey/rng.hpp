// rng.hpp — reproducible random streams (xoshiro256++ + Box-Muller)
//
// A stream is addressed by (seed, stream_index); equal addresses always yield
// the identical sample sequence, independent of any threading in the caller.

#pragma once

#include <cstdint>
#include <vector>

namespace qramsey::rng {

struct RngStream {
    std::uint64_t seed = 0;
    std::uint64_t stream_index = 0;
};

class Xoshiro256 {
public:
    explicit Xoshiro256(RngStream stream);

    std::uint64_t next_u64();
    double next_uniform01(); // in (0, 1)
    double next_normal();    // standard normal

private:
    std::uint64_t s_[4];
    double cached_ = 0.0;
    bool has_cached_ = false;
};

// n i.i.d. standard normal variates, deterministic for a fixed stream.
std::vector<double> sample_standard_normals(RngStream stream, std::size_t n);

} // namespace qramsey::rng
