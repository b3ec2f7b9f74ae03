#pragma once

#include <cstdint>

namespace thetaloc {

// The one RNG used everywhere the library needs randomness. The scheme is part
// of the public contract so that fixtures are reproducible across languages:
//
//   state += 0x9E3779B97F4A7C15                        (64-bit wraparound)
//   z = state
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   output = z ^ (z >> 31)
//
// (the SplitMix64 mixer). Doubles in [0,1) are built as (output >> 11) * 2^-53;
// bounded integers use the multiply-shift reduction (output * n) >> 64. Both
// derivations are exactly reproducible from the 64-bit stream.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform in [0,1), 53 random bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform in [a,b).
    double uniform(double a, double b) { return a + (b - a) * uniform01(); }

    // Uniform integer in {0, 1, ..., n-1}, n ≥ 1.
    std::uint64_t below(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * n) >> 64);
    }

private:
    std::uint64_t state_;
};

}  // namespace thetaloc
