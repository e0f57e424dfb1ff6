#include "rcm/simd/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>

namespace rcm::simd::avx2 {

namespace {

// 64x64 -> low 64 multiply from 32-bit partial products (AVX2 has no epi64 mul).
inline __m256i mul64(__m256i a, __m256i b) {
    __m256i lo = _mm256_mul_epu32(a, b);
    __m256i ah = _mm256_srli_epi64(a, 32);
    __m256i bh = _mm256_srli_epi64(b, 32);
    __m256i cross = _mm256_add_epi64(_mm256_mul_epu32(ah, b), _mm256_mul_epu32(a, bh));
    return _mm256_add_epi64(lo, _mm256_slli_epi64(cross, 32));
}

inline __m256i mix64x4(__m256i z) {
    z = mul64(_mm256_xor_si256(z, _mm256_srli_epi64(z, 30)), _mm256_set1_epi64x(0xbf58476d1ce4e5b9ull));
    z = mul64(_mm256_xor_si256(z, _mm256_srli_epi64(z, 27)), _mm256_set1_epi64x(0x94d049bb133111ebull));
    return _mm256_xor_si256(z, _mm256_srli_epi64(z, 31));
}

inline __m256d to_unit_x4(__m256i u) {
    __m256i bits = _mm256_or_si256(_mm256_srli_epi64(u, 12), _mm256_set1_epi64x(0x3ff0000000000000ll));
    return _mm256_sub_pd(_mm256_castsi256_pd(bits), _mm256_set1_pd(1.0));
}

inline __m256d axis_dist_x4(__m256d x, __m256d q, __m256d L) {
    const __m256d absmask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffll));
    __m256d d = _mm256_and_pd(_mm256_sub_pd(x, q), absmask);
    return _mm256_min_pd(d, _mm256_sub_pd(L, d));
}

}  // namespace

void split_draw(std::uint64_t key, std::uint64_t ctr0, std::size_t n, std::uint64_t* out) {
    const __m256i golden = _mm256_set1_epi64x(static_cast<long long>(kGolden));
    const __m256i keyv = _mm256_set1_epi64x(static_cast<long long>(key));
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i ctr = _mm256_add_epi64(_mm256_set1_epi64x(static_cast<long long>(ctr0 + i + 1)),
                                       _mm256_set_epi64x(3, 2, 1, 0));
        __m256i z = _mm256_add_epi64(keyv, mul64(golden, ctr));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), mix64x4(z));
    }
    for (; i < n; ++i) out[i] = split_at(key, ctr0 + i);
}

void uniform01(const std::uint64_t* u, std::size_t n, double* out) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(u + i));
        _mm256_storeu_pd(out + i, to_unit_x4(v));
    }
    for (; i < n; ++i) out[i] = to_unit(u[i]);
}

void torus_dist2(int dim, double L, double qx, double qy, double qz, const double* xs,
                 const double* ys, const double* zs, std::size_t n, double* out) {
    const __m256d Lv = _mm256_set1_pd(L);
    const __m256d qxv = _mm256_set1_pd(qx), qyv = _mm256_set1_pd(qy), qzv = _mm256_set1_pd(qz);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d dx = axis_dist_x4(_mm256_loadu_pd(xs + i), qxv, Lv);
        __m256d acc = _mm256_mul_pd(dx, dx);
        if (dim >= 2) {
            __m256d dy = axis_dist_x4(_mm256_loadu_pd(ys + i), qyv, Lv);
            acc = _mm256_add_pd(acc, _mm256_mul_pd(dy, dy));
        }
        if (dim >= 3) {
            __m256d dz = axis_dist_x4(_mm256_loadu_pd(zs + i), qzv, Lv);
            acc = _mm256_add_pd(acc, _mm256_mul_pd(dz, dz));
        }
        _mm256_storeu_pd(out + i, acc);
    }
    for (; i < n; ++i) {
        auto axis = [&](double x, double q) {
            double d = x - q;
            if (d < 0) d = -d;
            double w = L - d;
            return d < w ? d : w;
        };
        double dx = axis(xs[i], qx);
        double acc = dx * dx;
        if (dim >= 2) {
            double dy = axis(ys[i], qy);
            acc = acc + dy * dy;
        }
        if (dim >= 3) {
            double dz = axis(zs[i], qz);
            acc = acc + dz * dz;
        }
        out[i] = acc;
    }
}

void edge_mask(const double* d2, const std::uint64_t* u, std::size_t n, double r2, double p,
               std::uint64_t* mask) {
    const std::size_t words = (n + 63) / 64;
    for (std::size_t w = 0; w < words; ++w) mask[w] = 0;
    const __m256d r2v = _mm256_set1_pd(r2);
    const __m256d pv = _mm256_set1_pd(p);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d close = _mm256_cmp_pd(_mm256_loadu_pd(d2 + i), r2v, _CMP_LE_OQ);
        __m256d unit = to_unit_x4(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(u + i)));
        __m256d take = _mm256_and_pd(close, _mm256_cmp_pd(unit, pv, _CMP_LT_OQ));
        std::uint64_t bits = static_cast<std::uint64_t>(_mm256_movemask_pd(take));
        mask[i / 64] |= bits << (i % 64);
    }
    for (; i < n; ++i) {
        bool hit = (d2[i] <= r2) && (to_unit(u[i]) < p);
        if (hit) mask[i / 64] |= 1ull << (i % 64);
    }
}

}  // namespace rcm::simd::avx2

#endif  // x86_64
