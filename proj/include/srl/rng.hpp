#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace srl::rng {

// std::mt19937_64 output is pinned by the standard, so raw engine draws are
// reproducible across platforms. The std <random> distributions are not,
// which is why the helpers below derive values from raw draws directly.
using Engine = std::mt19937_64;

// Uniform double in [0, 1) with 53 bits of mantissa.
inline double canonical(Engine& g) {
    return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

// Uniform double in [lo, hi).
inline double uniform(Engine& g, double lo, double hi) {
    return lo + (hi - lo) * canonical(g);
}

// Unbiased uniform integer in [0, n). n must be > 0.
inline std::uint64_t below(Engine& g, std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
        x = g();
    } while (x >= limit);
    return x % n;
}

// Fisher-Yates shuffle driven by raw engine draws.
template <typename T>
void shuffle(std::vector<T>& v, Engine& g) {
    for (std::size_t i = v.size(); i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(below(g, i));
        std::swap(v[i - 1], v[j]);
    }
}

// Derives an independent stream seed; used to give each cross-validation
// fold its own deterministic seed.
inline std::uint64_t derive(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace srl::rng
