#pragma once

#include <cstdint>
#include <vector>

#include "rcm/sim/config.hpp"
#include "rcm/sim/rng.hpp"

namespace rcm::sim {

// One replication of the random-connection model: a Poisson number of uniform
// torus points together with a lazy edge oracle. Every edge indicator is a
// pure function of (seed, replication, pair), drawn on first use.
class RcmSample {
public:
    RcmSample(const SimConfig& cfg, std::uint64_t replication);

    std::size_t size() const { return xs_.size(); }
    const SimConfig& config() const { return *cfg_; }
    const std::vector<double>& xs() const { return xs_; }
    const std::vector<double>& ys() const { return ys_; }
    const std::vector<double>& zs() const { return zs_; }

    double dist2(std::size_t i, std::size_t j) const;
    double dist2_to(std::size_t i, const std::array<double, 3>& q) const;

    // Edge between distinct points i and j (order-insensitive).
    bool edge(std::size_t i, std::size_t j) const;
    // Edge between fixed endpoint j (0-based) and point i.
    bool endpoint_edge(int j, std::size_t i) const;

private:
    friend struct Adjacency;
    const SimConfig* cfg_;
    RngKey edge_key_, endpoint_key_;
    std::vector<double> xs_, ys_, zs_;
};

// Materialized adjacency, built once per sample with the batch kernels; the
// list representation is what the embedding counter walks.
struct Adjacency {
    std::vector<std::vector<std::uint32_t>> nbr;        // sorted neighbor lists
    std::vector<std::uint32_t> ep_mask;                 // bit j = adjacent to endpoint j
    std::vector<std::vector<std::uint32_t>> ep_points;  // points adjacent to endpoint j

    bool has_edge(std::uint32_t a, std::uint32_t b) const;

    static Adjacency build(const RcmSample& s);
};

RcmSample sample_rcm(const SimConfig& cfg, std::uint64_t replication);

}  // namespace rcm::sim
