#pragma once

#include <cmath>
#include <cstdint>

#include "rcm/simd/kernels.hpp"

namespace rcm::sim {

// Splittable counter-based randomness: every drawn value is a pure function of
// (master seed, derivation words, counter), so parallel and serial runs agree
// bit for bit and queries may happen in any order.
struct RngKey {
    std::uint64_t v = 0;
};

inline RngKey derive(RngKey key, std::uint64_t word) {
    return RngKey{simd::mix64(key.v ^ simd::mix64(word + simd::kGolden))};
}

inline std::uint64_t draw_u64(RngKey key, std::uint64_t counter) {
    return simd::split_at(key.v, counter);
}

inline double draw_unit(RngKey key, std::uint64_t counter) {
    return simd::to_unit(draw_u64(key, counter));
}

// Stream labels hung off a replication key.
inline constexpr std::uint64_t kStreamPointCount = 1;
inline constexpr std::uint64_t kStreamCoords = 2;
inline constexpr std::uint64_t kStreamCoreEdges = 3;
inline constexpr std::uint64_t kStreamEndpointEdges = 4;
inline constexpr std::uint64_t kStreamIntegration = 5;

namespace detail {

// Inversion sampler; valid for mean small enough that exp(-mean) stays normal
// (we only call it with mean <= 256).
inline long poisson_inversion(double mean, double u) {
    double p = std::exp(-mean);
    double cum = p;
    long k = 0;
    const long cap = static_cast<long>(mean + 60.0 * std::sqrt(mean + 1.0) + 60.0);
    while (u >= cum && k < cap) {
        ++k;
        p *= mean / static_cast<double>(k);
        cum += p;
    }
    return k;
}

}  // namespace detail

// Poisson(mean) by summing <=256-mean chunks (Poisson additivity), one uniform
// per chunk starting at `counter`; deterministic counter usage.
inline long poisson_draw(RngKey key, std::uint64_t counter, double mean) {
    long total = 0;
    while (mean > 256.0) {
        total += detail::poisson_inversion(256.0, draw_unit(key, counter++));
        mean -= 256.0;
    }
    if (mean > 0.0) total += detail::poisson_inversion(mean, draw_unit(key, counter));
    return total;
}

}  // namespace rcm::sim
