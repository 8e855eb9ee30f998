#pragma once

#include <cstdint>

#include "qlie/matrix.hpp"

namespace qlie::testing {

/// Deterministic 64-bit generator (splitmix64); used instead of std
/// distributions so seeded sweeps reproduce across platforms.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    /// Uniform in [0, n).
    std::uint64_t below(std::uint64_t n) { return next() % n; }
    /// Uniform integer in [lo, hi].
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }
};

inline Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long long lo = -3,
                            long long hi = 3) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = Rational(rng.range(lo, hi));
    return m;
}

}  // namespace qlie::testing
