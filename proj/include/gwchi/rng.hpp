#pragma once

#include <cstdint>

namespace gwchi {

// SplitMix64. Standard-library distributions are implementation-defined, so
// reproducible randomized suites roll their own; outputs are identical on
// every platform for a given seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed = default_seed) : state_(seed) {}

    static constexpr std::uint64_t default_seed = 1729;

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound); bound >= 1. Rejection-free modulo is fine here:
    // bounds are tiny against 2^64, the bias is far below test resolution.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    // Uniform integer in [lo, hi], inclusive.
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

private:
    std::uint64_t state_;
};

}  // namespace gwchi
