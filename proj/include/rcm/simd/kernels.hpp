#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>

namespace rcm::simd {

// SplitMix64 finalizer; the batch kernels below must reproduce these scalar
// reference functions bit for bit, which the test suite asserts.
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

inline constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ull;

// Counter-indexed draw from the SplitMix64 stream with start state `key`.
inline std::uint64_t split_at(std::uint64_t key, std::uint64_t counter) {
    return mix64(key + kGolden * (counter + 1));
}

// [0,1) from the top 52 bits via the exponent trick; branch-free and identical
// across backends.
inline double to_unit(std::uint64_t u) {
    return std::bit_cast<double>((u >> 12) | 0x3ff0000000000000ull) - 1.0;
}

enum class Backend { scalar, avx2 };

bool avx2_supported();
Backend active_backend();
// Throws MalformedInput when the backend is unavailable on this machine.
void set_backend(Backend b);

// out[i] = split_at(key, ctr0 + i)
void split_draw(std::uint64_t key, std::uint64_t ctr0, std::size_t n, std::uint64_t* out);

// out[i] = to_unit(u[i])
void uniform01(const std::uint64_t* u, std::size_t n, double* out);

// Squared L-periodic distance from (qx, qy, qz) to each point of the SoA
// arrays; ys/zs ignored for dim < 2 / < 3. Coordinates must lie in [0, L).
void torus_dist2(int dim, double L, double qx, double qy, double qz, const double* xs,
                 const double* ys, const double* zs, std::size_t n, double* out);

// Bit i of mask <- (d2[i] <= r2) && (to_unit(u[i]) < p). mask must hold
// (n + 63) / 64 words; words are fully overwritten.
void edge_mask(const double* d2, const std::uint64_t* u, std::size_t n, double r2, double p,
               std::uint64_t* mask);

}  // namespace rcm::simd
