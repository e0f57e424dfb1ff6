#pragma once

#include <cstdint>
#include <vector>

#include "rcm/graph.hpp"
#include "rcm/graph6.hpp"

namespace rcm {

struct CensusRow {
    int r = 0;
    int m = 0;
    std::uint64_t trees = 0;       // t: trees satisfying the balance condition
    std::uint64_t balanced = 0;    // g: endpoint-labeled classes satisfying it
    std::uint64_t admissible = 0;  // a: classes satisfying the structural assumptions
};

// Connected graphs on v vertices, one representative per isomorphism class,
// generated by vertex augmentation with canonical-form deduplication (v <= 7;
// larger orders come from external graph6 files).
std::vector<AdjacencyMatrix> connected_graph_classes(int v);

// For every source graph and every m-subset of its vertices taken as
// endpoints, keeps configurations whose endpoints are pairwise non-adjacent
// and whose core induces a connected graph, deduplicates them up to
// isomorphisms preserving the core/endpoint bipartition, and tallies
//   a: all such classes,
//   g: classes passing the balance condition with a_m recomputed per class,
//   t: trees among g.
// The source must hold connected graphs on exactly r + m vertices.
CensusRow census(int r, int m, const std::vector<AdjacencyMatrix>& source);

// Admissible endpoint-labeled classes themselves (cores relabeled 1..r,
// endpoints r+1..r+m), in deterministic order; used by exhaustive sweeps.
std::vector<EndpointGraph> endpoint_graph_classes(int r, int m);

}  // namespace rcm
