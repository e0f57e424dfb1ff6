#include "rcm/sim/moments.hpp"

#include <cmath>

#include "rcm/diagrams.hpp"
#include "rcm/partitions.hpp"
#include "rcm/sim/rng.hpp"
#include "rcm/simd/kernels.hpp"

namespace rcm::sim {

namespace {

// Monte Carlo estimate of the normalized kernel-product integral over
// (torus)^v for the quotient's edge set: mean of prod H over uniform tuples.
// Endpoint vertices are pinned at their configured locations.
struct Integrator {
    const SimConfig& cfg;
    RngKey key;
    std::uint64_t samples;

    std::pair<double, double> run(const DiagramGraph& d) const {
        const int blocks = d.block_count;
        std::vector<std::array<double, 3>> pos(static_cast<std::size_t>(d.v), {0, 0, 0});
        for (int j = 0; j < d.m; ++j) pos[static_cast<std::size_t>(blocks + j)] = cfg.endpoints[j];

        double sum = 0, sumsq = 0;
        std::uint64_t ctr = 0;
        for (std::uint64_t s = 0; s < samples; ++s) {
            for (int b = 0; b < blocks; ++b)
                for (int axis = 0; axis < cfg.dim; ++axis)
                    pos[b][axis] = cfg.L * draw_unit(key, ctr++);
            double prod = 1.0;
            for (auto [a, b] : d.edges) {
                double out;
                const auto& pa = pos[static_cast<std::size_t>(a - 1)];
                const auto& pb = pos[static_cast<std::size_t>(b - 1)];
                simd::torus_dist2(cfg.dim, cfg.L, pa[0], pa[1], pa[2], &pb[0], &pb[1], &pb[2], 1, &out);
                prod *= cfg.kernel.value(out);
                if (prod == 0.0) break;
            }
            sum += prod;
            sumsq += prod * prod;
        }
        double n = static_cast<double>(samples);
        double mean = sum / n;
        double var = (sumsq - sum * sum / n) / (n - 1);
        return {mean, var > 0 ? std::sqrt(var / n) : 0.0};
    }
};

MomentEstimate sum_over_partitions(const EndpointGraph& g, int n, const SimConfig& cfg,
                                   std::uint64_t mc_samples, int budget_cells, bool connected_only) {
    cfg.validate();
    if (static_cast<int>(cfg.endpoints.size()) != g.m)
        throw DimensionMismatch("config carries " + std::to_string(cfg.endpoints.size()) +
                                " endpoint locations, template has m = " + std::to_string(g.m));
    const bool closed_form = cfg.kernel.kind == KernelKind::Constant;
    const double V = cfg.volume();

    MomentEstimate total;
    double var_acc = 0;
    std::uint64_t partition_index = 0;
    RngKey base = derive(RngKey{cfg.seed}, kStreamIntegration);

    EnumerationOptions opts;
    opts.connected = connected_only;
    opts.budget_cells = budget_cells;
    rcm::detail::enumerate_grid_partitions(n, g.r, opts, [&](const PartitionView& view) {
        SetPartition p = view.materialize();
        DiagramGraph d = quotient_graph(g, p);
        double weight = std::pow(cfg.lambda, d.block_count) * std::pow(cfg.c, d.e);
        if (closed_form) {
            total.value += weight * std::pow(V, d.block_count);
        } else {
            Integrator integ{cfg, derive(base, partition_index), mc_samples};
            auto [mean, se] = integ.run(d);
            double scale = weight * std::pow(V, d.block_count);
            total.value += scale * mean;
            var_acc += (scale * se) * (scale * se);
        }
        ++partition_index;
    });
    total.se = std::sqrt(var_acc);
    return total;
}

}  // namespace

MomentEstimate exact_moment(const EndpointGraph& g, int n, const SimConfig& cfg,
                            std::uint64_t mc_samples, int budget_cells) {
    return sum_over_partitions(g, n, cfg, mc_samples, budget_cells, /*connected_only=*/false);
}

MomentEstimate exact_cumulant(const EndpointGraph& g, int n, const SimConfig& cfg,
                              std::uint64_t mc_samples, int budget_cells) {
    return sum_over_partitions(g, n, cfg, mc_samples, budget_cells, /*connected_only=*/true);
}

}  // namespace rcm::sim
