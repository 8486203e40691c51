#pragma once

#include <cstdint>

namespace padspec {

/// Deterministic 64-bit generator (splitmix64). The standard distributions are
/// not pinned down across library implementations, so all sampling goes
/// through this to keep seeded runs byte-identical everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform-ish integer in [lo, hi] (inclusive).
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(next_u64() % span);
    }

    bool chance(double prob) {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53 < prob;
    }

    /// Derive an independent stream (for per-sample determinism).
    Rng split() { return Rng(next_u64() ^ 0xa02bdbf7bb3c0a7ULL); }

private:
    std::uint64_t state_;
};

}  // namespace padspec
