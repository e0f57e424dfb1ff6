#pragma once

#include <cstdint>

#include "rcm/graph.hpp"
#include "rcm/sim/sampler.hpp"

namespace rcm::sim {

// Ordered injective embeddings of the template cores into the sample such that
// every required core-core edge and every core-endpoint edge is present
// (extra edges permitted). Endpoint j of the template is pinned to
// cfg.endpoints[j-1]; cfg must carry exactly g.m endpoint locations.
std::uint64_t count_subgraphs(const RcmSample& sample, const EndpointGraph& g, const Adjacency& adj);

std::uint64_t count_subgraphs(const RcmSample& sample, const EndpointGraph& g);

}  // namespace rcm::sim
