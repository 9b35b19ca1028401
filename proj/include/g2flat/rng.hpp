#pragma once

#include <cstdint>
#include <random>

namespace g2flat {

/// Seeded RNG with platform-independent output: mt19937_64's sequence is
/// pinned by the standard, and bounded draws use rejection sampling instead
/// of std::uniform_int_distribution (whose mapping is implementation-defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t raw() { return eng_(); }

    /// Uniform integer in [lo, hi], inclusive.
    long long uniform(long long lo, long long hi) {
        const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
        const std::uint64_t limit = range * (UINT64_MAX / range);
        std::uint64_t r;
        do {
            r = eng_();
        } while (r >= limit);
        return lo + static_cast<long long>(r % range);
    }

    /// splitmix64 mix of a master seed and a stream index; used to derive
    /// independent per-trial seeds so results do not depend on trial order.
    static std::uint64_t mix(std::uint64_t master, std::uint64_t stream) {
        std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (stream + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace g2flat
