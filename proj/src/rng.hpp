#pragma once

#include <cstdint>

namespace xprod {

// SplitMix64 (Steele/Lea/Vigna). The output sequence is fixed by the
// algorithm itself, so seeded instances are reproducible across platforms
// and language bindings.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1) with 53-bit resolution
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // uniform in [-1, 1]
    double next_signed() { return 2.0 * next_double() - 1.0; }

    // uniform in {0, ..., n-1}; n = 0 yields 0
    std::uint64_t next_below(std::uint64_t n) { return n ? next_u64() % n : 0; }

private:
    std::uint64_t state_;
};

} // namespace xprod
