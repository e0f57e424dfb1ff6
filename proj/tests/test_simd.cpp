#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstring>
#include <vector>

#include "rcm/simd/kernels.hpp"

using namespace rcm::simd;

namespace {

struct BackendGuard {
    Backend saved = active_backend();
    ~BackendGuard() { set_backend(saved); }
};

std::vector<std::uint64_t> random_u64(std::size_t n, std::uint64_t key) {
    std::vector<std::uint64_t> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = split_at(key, i);
    return out;
}

std::vector<double> random_coords(std::size_t n, double L, std::uint64_t key) {
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = L * to_unit(split_at(key, i));
    return out;
}

const std::size_t kSizes[] = {0, 1, 3, 4, 5, 17, 64, 100, 257};

}  // namespace

TEST_CASE("split_draw matches the scalar reference stream") {
    for (auto n : kSizes) {
        std::vector<std::uint64_t> out(n + 1, 0xdead);
        split_draw(0x42, 1000, n, out.data());
        for (std::size_t i = 0; i < n; ++i) CHECK(out[i] == split_at(0x42, 1000 + i));
        CHECK(out[n] == 0xdead);
    }
}

TEST_CASE("uniform01 stays in range and matches to_unit") {
    auto u = random_u64(257, 7);
    std::vector<double> out(u.size());
    uniform01(u.data(), u.size(), out.data());
    for (std::size_t i = 0; i < u.size(); ++i) {
        CHECK(out[i] == to_unit(u[i]));
        CHECK(out[i] >= 0.0);
        CHECK(out[i] < 1.0);
    }
}

TEST_CASE("torus distance basics") {
    double L = 2.0;
    double x = 0.1, q = 1.9;
    double d2;
    torus_dist2(1, L, q, 0, 0, &x, nullptr, nullptr, 1, &d2);
    CHECK(d2 == doctest::Approx(0.04));  // wraps around the boundary

    // symmetry and the L/2 bound per axis
    auto xs = random_coords(64, L, 11);
    auto ys = random_coords(64, L, 13);
    std::vector<double> fwd(64), rev(1);
    torus_dist2(2, L, xs[0], ys[0], 0, xs.data(), ys.data(), nullptr, 64, fwd.data());
    for (int i = 0; i < 64; ++i) {
        torus_dist2(2, L, xs[i], ys[i], 0, &xs[0], &ys[0], nullptr, 1, rev.data());
        CHECK(fwd[i] == rev[0]);
        CHECK(fwd[i] <= 2 * (L / 2) * (L / 2) + 1e-12);
    }
    CHECK(fwd[0] == 0.0);
}

TEST_CASE("scalar and avx2 backends agree bit for bit") {
    if (!avx2_supported()) return;  // nothing to compare on this machine
    BackendGuard guard;

    for (auto n : kSizes) {
        auto u = random_u64(n, 3);
        auto xs = random_coords(n, 1.7, 5);
        auto ys = random_coords(n, 1.7, 6);
        auto zs = random_coords(n, 1.7, 7);

        std::vector<std::uint64_t> draws_s(n), draws_v(n);
        std::vector<double> unit_s(n), unit_v(n), d2_s(n), d2_v(n);
        std::vector<std::uint64_t> mask_s(n / 64 + 1), mask_v(n / 64 + 1);

        set_backend(Backend::scalar);
        split_draw(99, 12345, n, draws_s.data());
        uniform01(u.data(), n, unit_s.data());
        torus_dist2(3, 1.7, 0.3, 0.9, 1.1, xs.data(), ys.data(), zs.data(), n, d2_s.data());
        edge_mask(d2_s.data(), u.data(), n, 0.4, 0.37, mask_s.data());

        set_backend(Backend::avx2);
        split_draw(99, 12345, n, draws_v.data());
        uniform01(u.data(), n, unit_v.data());
        torus_dist2(3, 1.7, 0.3, 0.9, 1.1, xs.data(), ys.data(), zs.data(), n, d2_v.data());
        edge_mask(d2_v.data(), u.data(), n, 0.4, 0.37, mask_v.data());

        CHECK(draws_s == draws_v);
        CHECK(std::memcmp(unit_s.data(), unit_v.data(), n * sizeof(double)) == 0);
        CHECK(std::memcmp(d2_s.data(), d2_v.data(), n * sizeof(double)) == 0);
        CHECK(mask_s == mask_v);

        for (int dim = 1; dim <= 2; ++dim) {
            set_backend(Backend::scalar);
            torus_dist2(dim, 1.7, 0.3, 0.9, 0, xs.data(), ys.data(), nullptr, n, d2_s.data());
            set_backend(Backend::avx2);
            torus_dist2(dim, 1.7, 0.3, 0.9, 0, xs.data(), ys.data(), nullptr, n, d2_v.data());
            CHECK(std::memcmp(d2_s.data(), d2_v.data(), n * sizeof(double)) == 0);
        }
    }
}

TEST_CASE("edge_mask semantics") {
    double d2[5] = {0.1, 0.5, 0.2, 0.9, 0.3};
    std::uint64_t u[5];
    for (int i = 0; i < 5; ++i) u[i] = split_at(21, i);
    std::uint64_t mask[1];
    edge_mask(d2, u, 5, 0.35, 1.0, mask);  // p=1: any unit draw passes
    for (int i = 0; i < 5; ++i) CHECK(((mask[0] >> i) & 1u) == (d2[i] <= 0.35 ? 1u : 0u));
    edge_mask(d2, u, 5, 1e9, 0.0, mask);  // p=0: nothing passes
    CHECK(mask[0] == 0);
}

TEST_CASE("backend selection") {
    BackendGuard guard;
    set_backend(Backend::scalar);
    CHECK(active_backend() == Backend::scalar);
    if (avx2_supported()) {
        set_backend(Backend::avx2);
        CHECK(active_backend() == Backend::avx2);
    }
}
