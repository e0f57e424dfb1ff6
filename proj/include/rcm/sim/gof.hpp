#pragma once

#include "rcm/sim/experiment.hpp"

namespace rcm::sim {

// Total-variation distance between the empirical law of N_G/|Aut(G)| (the
// stats histogram) and Poisson(mean).
double poisson_gof(const EmpiricalStats& stats, double mean);

// TV between an integer histogram with `total` mass and Poisson(mean).
double poisson_tv(const std::map<long long, std::uint64_t>& histogram, std::uint64_t total,
                  double mean);

}  // namespace rcm::sim
