#pragma once

#include <cstdint>

namespace fdg {

/// Counter-based SplitMix64 stream keyed by (seed, index).  Range reduction is done here rather
/// than through <random> distributions so that every platform produces the same instances.
class Rng {
public:
    Rng(std::uint64_t seed, std::uint64_t index) : state_(mix(mix(seed) ^ (index + 0x632be59bd9b4e019ULL))) {}

    std::uint64_t next()
    {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix(state_);
    }

    /// Uniform in [0, n); n > 0.
    std::uint64_t below(std::uint64_t n)
    {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do
            x = next();
        while (x >= limit);
        return x % n;
    }

    /// Uniform in [lo, hi].
    int range(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

    bool coin() { return (next() >> 63) != 0; }

    /// A child stream, independent of later draws from this one.
    Rng fork() { return Rng(next(), 0); }

private:
    static std::uint64_t mix(std::uint64_t z)
    {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

} // namespace fdg
