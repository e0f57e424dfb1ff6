#pragma once

#include <cstdint>

#include "rcm/graph.hpp"
#include "rcm/sim/config.hpp"

namespace rcm::sim {

struct MomentEstimate {
    double value = 0;
    double se = 0;  // Monte Carlo standard error; 0 for closed-form terms
};

// E[(N_G)^n] as the sum over non-flat partitions rho of
//   lambda^|rho| * c^e(rho_G) * integral over the torus of the kernel product.
// The integral is closed-form for the constant kernel (a volume power) and
// Monte Carlo otherwise, with mc_samples draws per partition on independent
// streams so errors add in quadrature.
MomentEstimate exact_moment(const EndpointGraph& g, int n, const SimConfig& cfg,
                            std::uint64_t mc_samples, int budget_cells = 12);

// kappa_n(N_G): same sum restricted to connected non-flat partitions.
MomentEstimate exact_cumulant(const EndpointGraph& g, int n, const SimConfig& cfg,
                              std::uint64_t mc_samples, int budget_cells = 12);

}  // namespace rcm::sim
