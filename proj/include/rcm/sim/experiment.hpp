#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rcm/graph.hpp"
#include "rcm/sim/config.hpp"

namespace rcm::sim {

// Per-replication subgraph counts with sample cumulants (k-statistics),
// jackknife standard errors and the histogram of N_G / |Aut(G)|.
struct EmpiricalStats {
    std::vector<std::uint64_t> counts;
    long aut = 1;

    double k1 = 0;
    std::optional<double> k2, k3, k4;
    double se_k1 = 0;
    std::optional<double> se_k2, se_k3, se_k4;

    std::map<long long, std::uint64_t> histogram;  // of round(N_G / |Aut|)
    std::uint64_t rounding_flags = 0;  // replications where N/|Aut| was off-integer by > 1e-9

    double replications() const { return static_cast<double>(counts.size()); }
    double skewness() const;        // k3 / k2^(3/2)
    double fraction_zero() const;   // empirical P(N_G = 0)
    double fraction_positive() const { return 1.0 - fraction_zero(); }

    std::string json() const;
    std::string counts_csv() const;
};

// Runs cfg.replications independent replications (cfg.threads workers);
// deterministic under a fixed master seed regardless of thread count.
EmpiricalStats run_experiment(const SimConfig& cfg, const EndpointGraph& g);

}  // namespace rcm::sim
