#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include <apc/rational.hpp>

namespace apc {

// Deterministic RNG for evaluation points. std::uniform_int_distribution is
// implementation-defined, so the draws below use plain modulo reduction to
// keep results byte-identical across standard libraries.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // uniform-ish integer in [lo, hi]
    long below(long n) { return static_cast<long>(next() % static_cast<std::uint64_t>(n)); }

private:
    std::mt19937_64 eng_;
};

inline constexpr std::array<int, 48> kSmallPrimes = {
    2,   3,   5,   7,   11,  13,  17,  19,  23,  29,  31,  37,  41,  43,  47,  53,
    59,  61,  67,  71,  73,  79,  83,  89,  97,  101, 103, 107, 109, 113, 127, 131,
    137, 139, 149, 151, 157, 163, 167, 173, 179, 181, 191, 193, 197, 199, 211, 223};

/// `count` distinct small primes, order randomized by the seeded RNG.
inline std::vector<Rational> random_prime_point(int count, SeededRng& rng) {
    std::array<int, kSmallPrimes.size()> pool = kSmallPrimes;
    std::vector<Rational> point;
    point.reserve(count);
    int avail = static_cast<int>(pool.size());
    for (int i = 0; i < count; ++i) {
        const long j = rng.below(avail);
        point.emplace_back(pool[j]);
        pool[j] = pool[--avail];
    }
    return point;
}

/// Derives a fresh deterministic seed for retry attempt `attempt` of stage `stage`.
inline std::uint64_t derive_seed(std::uint64_t seed, int stage, int attempt) {
    std::uint64_t h = seed ^ 0x9e3779b97f4a7c15ULL;
    h = (h ^ static_cast<std::uint64_t>(stage) * 0xff51afd7ed558ccdULL) * 0xc4ceb9fe1a85ec53ULL;
    h ^= static_cast<std::uint64_t>(attempt) * 0x2545f4914f6cdd1dULL;
    return h;
}

}  // namespace apc
