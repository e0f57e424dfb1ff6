#include "rcm/sim/sampler.hpp"

#include <algorithm>
#include <limits>

#include "rcm/errors.hpp"
#include "rcm/simd/kernels.hpp"

namespace rcm::sim {

namespace {

// Pair counter for i < j within one replication: i * N + j. Unique for i < j
// and contiguous in j, which lets the batch kernels draw a row at once.
inline std::uint64_t pair_counter(std::size_t i, std::size_t j, std::size_t n) {
    return static_cast<std::uint64_t>(i) * n + j;
}

inline std::uint64_t endpoint_counter(int ep, std::size_t i) {
    return (static_cast<std::uint64_t>(ep) << 40) | i;
}

}  // namespace

RcmSample::RcmSample(const SimConfig& cfg, std::uint64_t replication) : cfg_(&cfg) {
    cfg.validate();
    RngKey rep_key = derive(RngKey{cfg.seed}, replication);
    edge_key_ = derive(rep_key, kStreamCoreEdges);
    endpoint_key_ = derive(rep_key, kStreamEndpointEdges);

    long n = poisson_draw(derive(rep_key, kStreamPointCount), 0, cfg.mean_points());
    xs_.resize(static_cast<std::size_t>(n));
    if (cfg.dim >= 2) ys_.resize(static_cast<std::size_t>(n));
    if (cfg.dim >= 3) zs_.resize(static_cast<std::size_t>(n));

    RngKey coord_key = derive(rep_key, kStreamCoords);
    for (long i = 0; i < n; ++i) {
        std::uint64_t base = static_cast<std::uint64_t>(i) * 3;
        xs_[i] = cfg.L * draw_unit(coord_key, base);
        if (cfg.dim >= 2) ys_[i] = cfg.L * draw_unit(coord_key, base + 1);
        if (cfg.dim >= 3) zs_[i] = cfg.L * draw_unit(coord_key, base + 2);
    }
}

double RcmSample::dist2(std::size_t i, std::size_t j) const {
    double out;
    simd::torus_dist2(cfg_->dim, cfg_->L, xs_[i], cfg_->dim >= 2 ? ys_[i] : 0.0,
                      cfg_->dim >= 3 ? zs_[i] : 0.0, &xs_[j], cfg_->dim >= 2 ? &ys_[j] : nullptr,
                      cfg_->dim >= 3 ? &zs_[j] : nullptr, 1, &out);
    return out;
}

double RcmSample::dist2_to(std::size_t i, const std::array<double, 3>& q) const {
    double out;
    simd::torus_dist2(cfg_->dim, cfg_->L, q[0], q[1], q[2], &xs_[i],
                      cfg_->dim >= 2 ? &ys_[i] : nullptr, cfg_->dim >= 3 ? &zs_[i] : nullptr, 1, &out);
    return out;
}

// Repeated queries are consistent without a cache: each pair's draw is a pure
// function of (seed, replication, pair counter).
bool RcmSample::edge(std::size_t i, std::size_t j) const {
    if (i == j) return false;
    if (i > j) std::swap(i, j);
    double p = cfg_->c * cfg_->kernel.value(dist2(i, j));
    if (p <= 0.0) return false;
    return simd::to_unit(draw_u64(edge_key_, pair_counter(i, j, size()))) < p;
}

bool RcmSample::endpoint_edge(int j, std::size_t i) const {
    double p = cfg_->c * cfg_->kernel.value(dist2_to(i, cfg_->endpoints[static_cast<std::size_t>(j)]));
    if (p <= 0.0) return false;
    return simd::to_unit(draw_u64(endpoint_key_, endpoint_counter(j, i))) < p;
}

bool Adjacency::has_edge(std::uint32_t a, std::uint32_t b) const {
    const auto& list = nbr[a].size() <= nbr[b].size() ? nbr[a] : nbr[b];
    std::uint32_t want = nbr[a].size() <= nbr[b].size() ? b : a;
    return std::binary_search(list.begin(), list.end(), want);
}

Adjacency Adjacency::build(const RcmSample& s) {
    const SimConfig& cfg = s.config();
    const std::size_t n = s.size();
    Adjacency adj;
    adj.nbr.assign(n, {});
    adj.ep_mask.assign(n, 0);
    adj.ep_points.assign(cfg.endpoints.size(), {});

    const bool exponential = cfg.kernel.kind == KernelKind::Exponential;
    const double r2 = cfg.kernel.kind == KernelKind::Indicator
                          ? cfg.kernel.r0 * cfg.kernel.r0
                          : std::numeric_limits<double>::infinity();
    const double* ys = cfg.dim >= 2 ? s.ys().data() : nullptr;
    const double* zs = cfg.dim >= 3 ? s.zs().data() : nullptr;

    constexpr std::size_t kTile = 512;
    std::vector<double> d2(kTile);
    std::vector<std::uint64_t> draws(kTile);
    std::vector<std::uint64_t> mask(kTile / 64 + 1);

    for (std::size_t i = 0; i < n; ++i) {
        double qx = s.xs()[i];
        double qy = cfg.dim >= 2 ? s.ys()[i] : 0.0;
        double qz = cfg.dim >= 3 ? s.zs()[i] : 0.0;
        for (std::size_t j0 = i + 1; j0 < n; j0 += kTile) {
            std::size_t len = std::min(kTile, n - j0);
            simd::torus_dist2(cfg.dim, cfg.L, qx, qy, qz, s.xs().data() + j0,
                              ys ? ys + j0 : nullptr, zs ? zs + j0 : nullptr, len, d2.data());
            if (exponential) {
                // per-pair probability: distances vectorized, exp stays scalar
                for (std::size_t k = 0; k < len; ++k) {
                    double p = cfg.c * cfg.kernel.value(d2[k]);
                    std::uint64_t u = draw_u64(s.edge_key_, pair_counter(i, j0 + k, n));
                    if (simd::to_unit(u) < p) {
                        adj.nbr[i].push_back(static_cast<std::uint32_t>(j0 + k));
                        adj.nbr[j0 + k].push_back(static_cast<std::uint32_t>(i));
                    }
                }
                continue;
            }
            simd::split_draw(s.edge_key_.v, pair_counter(i, j0, n), len, draws.data());
            simd::edge_mask(d2.data(), draws.data(), len, r2, cfg.c, mask.data());
            for (std::size_t w = 0; w * 64 < len; ++w) {
                std::uint64_t bits = mask[w];
                while (bits) {
                    unsigned b = static_cast<unsigned>(__builtin_ctzll(bits));
                    bits &= bits - 1;
                    std::size_t j = j0 + w * 64 + b;
                    adj.nbr[i].push_back(static_cast<std::uint32_t>(j));
                    adj.nbr[j].push_back(static_cast<std::uint32_t>(i));
                }
            }
        }
    }

    for (std::size_t j = 0; j < cfg.endpoints.size(); ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            if (s.endpoint_edge(static_cast<int>(j), i)) {
                adj.ep_mask[i] |= 1u << j;
                adj.ep_points[j].push_back(static_cast<std::uint32_t>(i));
            }
        }
    }

    for (auto& list : adj.nbr) std::sort(list.begin(), list.end());
    return adj;
}

RcmSample sample_rcm(const SimConfig& cfg, std::uint64_t replication) {
    return RcmSample(cfg, replication);
}

}  // namespace rcm::sim
