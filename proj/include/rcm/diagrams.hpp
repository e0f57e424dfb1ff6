#pragma once

#include <utility>
#include <vector>

#include "rcm/graph.hpp"
#include "rcm/partitions.hpp"

namespace rcm {

// Quotient of n template copies under a grid partition: one vertex per block
// (in smallest-cell order) followed by the m endpoint vertices, with parallel
// edges collapsed and self-loops discarded.
struct DiagramGraph {
    int block_count = 0;
    int m = 0;
    int v = 0;  // block_count + m
    int e = 0;  // deduplicated edge count
    std::vector<std::pair<int, int>> edges;  // 1-indexed over [v], a < b, sorted
};

// Throws DimensionMismatch when p.cols != g.r.
DiagramGraph quotient_graph(const EndpointGraph& g, const SetPartition& p);

// (n*r + m - v(rho_G), n*e(G) - e(rho_G)); both coordinates >= 0 for non-flat
// connected partitions.
std::pair<int, int> diagram_point(const EndpointGraph& g, const SetPartition& p);

// Block-index neighborhoods of the endpoint vertices: A^rho_j = blocks holding
// a cell whose column is template-adjacent to endpoint j (1-indexed blocks).
std::vector<std::vector<int>> endpoint_neighborhoods(const EndpointGraph& g, const SetPartition& p);

namespace detail {

// Vertex/edge counts of the quotient without materializing it; used by the
// sigma-set enumeration where this is the inner loop.
struct QuotientCounter {
    explicit QuotientCounter(const EndpointGraph& g);

    // assign: row-major block ids on [n] x [r]; returns (v, e) of rho_G.
    std::pair<int, int> counts(const std::uint8_t* assign, int n, int block_count);

private:
    const EndpointGraph& g_;
    std::vector<std::pair<int, int>> core_edges_;            // 0-based column pairs
    std::vector<std::pair<int, int>> endpoint_edges_;        // (endpoint j0, core column j)
    std::vector<std::uint16_t> seen_;                        // sorted scratch of edge codes
};

}  // namespace detail

}  // namespace rcm
