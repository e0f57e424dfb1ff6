#include "rcm/simd/kernels.hpp"

// Scalar reference kernels. The AVX2 variants mirror these operation for
// operation (same IEEE ops in the same order), so outputs are bit-identical.

namespace rcm::simd::scalar {

void split_draw(std::uint64_t key, std::uint64_t ctr0, std::size_t n, std::uint64_t* out) {
    for (std::size_t i = 0; i < n; ++i) out[i] = split_at(key, ctr0 + i);
}

void uniform01(const std::uint64_t* u, std::size_t n, double* out) {
    for (std::size_t i = 0; i < n; ++i) out[i] = to_unit(u[i]);
}

namespace {

inline double axis_dist(double x, double q, double L) {
    double d = x - q;
    if (d < 0) d = -d;
    double w = L - d;
    return d < w ? d : w;
}

}  // namespace

void torus_dist2(int dim, double L, double qx, double qy, double qz, const double* xs,
                 const double* ys, const double* zs, std::size_t n, double* out) {
    for (std::size_t i = 0; i < n; ++i) {
        double dx = axis_dist(xs[i], qx, L);
        double acc = dx * dx;
        if (dim >= 2) {
            double dy = axis_dist(ys[i], qy, L);
            acc = acc + dy * dy;
        }
        if (dim >= 3) {
            double dz = axis_dist(zs[i], qz, L);
            acc = acc + dz * dz;
        }
        out[i] = acc;
    }
}

void edge_mask(const double* d2, const std::uint64_t* u, std::size_t n, double r2, double p,
               std::uint64_t* mask) {
    const std::size_t words = (n + 63) / 64;
    for (std::size_t w = 0; w < words; ++w) mask[w] = 0;
    for (std::size_t i = 0; i < n; ++i) {
        bool hit = (d2[i] <= r2) && (to_unit(u[i]) < p);
        if (hit) mask[i / 64] |= 1ull << (i % 64);
    }
}

}  // namespace rcm::simd::scalar
