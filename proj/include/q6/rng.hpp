#pragma once

#include <cstdint>

#include "rational.hpp"

namespace q6 {

/// Seeded splitmix64 stream. Used instead of <random> engines so that
/// reported numbers are reproducible across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform-ish integer in [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    /// Small integer in [-20, 20]; the sampling bound keeps coefficient swell low.
    std::int64_t small_int() { return uniform(-20, 20); }

    Rat small_rat() { return Rat(small_int()); }

    /// Independent substream for trial k of a seeded computation.
    static Rng derive(std::uint64_t seed, std::uint64_t stream) {
        Rng base(seed ^ (0x5851f42d4c957f2dULL * (stream + 1)));
        base.next();
        return base;
    }

private:
    std::uint64_t state_;
};

} // namespace q6
