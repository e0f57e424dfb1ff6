#include <atomic>
#include <cstdlib>
#include <cstring>

#include "rcm/errors.hpp"
#include "rcm/simd/kernels.hpp"

namespace rcm::simd {

namespace scalar {
void split_draw(std::uint64_t, std::uint64_t, std::size_t, std::uint64_t*);
void uniform01(const std::uint64_t*, std::size_t, double*);
void torus_dist2(int, double, double, double, double, const double*, const double*, const double*,
                 std::size_t, double*);
void edge_mask(const double*, const std::uint64_t*, std::size_t, double, double, std::uint64_t*);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define RCM_X86 1
namespace avx2 {
void split_draw(std::uint64_t, std::uint64_t, std::size_t, std::uint64_t*);
void uniform01(const std::uint64_t*, std::size_t, double*);
void torus_dist2(int, double, double, double, double, const double*, const double*, const double*,
                 std::size_t, double*);
void edge_mask(const double*, const std::uint64_t*, std::size_t, double, double, std::uint64_t*);
}  // namespace avx2
#else
#define RCM_X86 0
#endif

namespace {

struct KernelTable {
    void (*split_draw)(std::uint64_t, std::uint64_t, std::size_t, std::uint64_t*);
    void (*uniform01)(const std::uint64_t*, std::size_t, double*);
    void (*torus_dist2)(int, double, double, double, double, const double*, const double*,
                        const double*, std::size_t, double*);
    void (*edge_mask)(const double*, const std::uint64_t*, std::size_t, double, double,
                      std::uint64_t*);
};

constexpr KernelTable kScalarTable{scalar::split_draw, scalar::uniform01, scalar::torus_dist2,
                                   scalar::edge_mask};
#if RCM_X86
constexpr KernelTable kAvx2Table{avx2::split_draw, avx2::uniform01, avx2::torus_dist2,
                                 avx2::edge_mask};
#endif

std::atomic<const KernelTable*> g_table{nullptr};
std::atomic<Backend> g_backend{Backend::scalar};

const KernelTable* init_table() {
    Backend b = Backend::scalar;
    if (avx2_supported()) b = Backend::avx2;
    if (const char* env = std::getenv("RCM_SIMD")) {
        if (std::strcmp(env, "scalar") == 0) b = Backend::scalar;
        // "avx2" keeps the detected value; requesting it without support
        // silently stays scalar rather than crashing on startup.
    }
    g_backend.store(b);
#if RCM_X86
    const KernelTable* t = (b == Backend::avx2) ? &kAvx2Table : &kScalarTable;
#else
    const KernelTable* t = &kScalarTable;
#endif
    g_table.store(t);
    return t;
}

inline const KernelTable& table() {
    const KernelTable* t = g_table.load(std::memory_order_acquire);
    if (!t) t = init_table();
    return *t;
}

}  // namespace

bool avx2_supported() {
#if RCM_X86
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

Backend active_backend() {
    table();
    return g_backend.load();
}

void set_backend(Backend b) {
#if RCM_X86
    if (b == Backend::avx2) {
        if (!avx2_supported()) throw MalformedInput("AVX2 backend requested but not supported here");
        g_backend.store(b);
        g_table.store(&kAvx2Table);
        return;
    }
#else
    if (b == Backend::avx2) throw MalformedInput("AVX2 backend requested but not supported here");
#endif
    g_backend.store(Backend::scalar);
    g_table.store(&kScalarTable);
}

void split_draw(std::uint64_t key, std::uint64_t ctr0, std::size_t n, std::uint64_t* out) {
    table().split_draw(key, ctr0, n, out);
}

void uniform01(const std::uint64_t* u, std::size_t n, double* out) { table().uniform01(u, n, out); }

void torus_dist2(int dim, double L, double qx, double qy, double qz, const double* xs,
                 const double* ys, const double* zs, std::size_t n, double* out) {
    table().torus_dist2(dim, L, qx, qy, qz, xs, ys, zs, n, out);
}

void edge_mask(const double* d2, const std::uint64_t* u, std::size_t n, double r2, double p,
               std::uint64_t* mask) {
    table().edge_mask(d2, u, n, r2, p, mask);
}

}  // namespace rcm::simd
