#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rcm/rational.hpp"

namespace rcm {

// Template graph G on core vertices 1..r plus m fixed endpoints r+1..r+m.
// Cores are mapped to random points of the process; endpoints are pinned
// locations and are pairwise non-adjacent by construction.
class EndpointGraph {
public:
    // Validates all structural invariants:
    //  - no self-loops, no duplicate edges, labels within [1, r+m]
    //  - endpoints pairwise non-adjacent
    //  - the induced graph on the cores is connected
    //  - every endpoint has degree >= 1
    static EndpointGraph create(int r, int m, std::vector<std::pair<int, int>> edges);

    int r = 0;  // core vertex count, labels 1..r
    int m = 0;  // endpoint count, labels r+1..r+m

    int vertex_count() const { return r + m; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool has_edge(int a, int b) const { return (adj_[a - 1] >> (b - 1)) & 1u; }
    std::uint64_t adjacency_mask(int v) const { return adj_[v - 1]; }

    // Endpoints adjacent to core i (1-based endpoint indices 1..m).
    std::vector<int> endpoints_of_core(int i) const;
    // Cores adjacent to endpoint j in [1, m].
    std::vector<int> cores_of_endpoint(int j) const;

    // Stable key for memoization: "r|m|a-b,c-d,...".
    std::string key() const;

private:
    std::vector<std::pair<int, int>> edges_;  // normalized: a < b, sorted
    std::vector<std::uint64_t> adj_;          // bit v-1 of adj_[u-1] set iff edge {u,v}
};

// Parses "r=<int> m=<int> edges=<a>-<b>,..." (1-indexed, whitespace-separated
// tokens). Throws MalformedInput on syntax errors and AssumptionViolation when
// the graph breaks a structural requirement.
EndpointGraph parse_graph_spec(std::string_view text);

// a_m(G): maximum number of endpoints adjacent to any single core vertex.
int endpoint_degree_max(const EndpointGraph& g);

struct BalanceWitness {
    std::vector<int> vertices;  // induced subgraph violating the predicate
    std::string predicate;      // which balance predicate it violates
};

struct BalanceReport {
    bool balanced = false;
    bool strictly_balanced = false;
    bool strongly_balanced = false;
    bool k2_balanced = false;
    bool m_balanced = false;
    std::optional<BalanceWitness> witness;  // first violation encountered
};

// Evaluates the four density predicates over induced subgraphs of G in exact
// rational arithmetic:
//   balanced:          e(H)/v(H)         <= e(G)/v(G)
//   strongly balanced: e(H)/(v(H)-1)     <= e(G)/(v(G)-1)
//   K2-balanced:       (e(H)-1)/(v(H)-2) <= (e(G)-1)/(v(G)-2),  v(H) >= 3
//   m-balanced:        (e(H)-a)/(v(H)-m-1) <= (e(G)-a)/(v(G)-m-1), v(H) >= m+2
// with a = a_m(G) of the full graph on both sides and the convention 0/0 = 0.
// strictly_balanced uses the strict inequality over proper subgraphs.
BalanceReport balance_report(const EndpointGraph& g);

// The balance inequality quantified only over induced subgraphs CONTAINING
// all m endpoints (v(H) >= m+2). This is exactly the condition equivalent to
// the upper boundary of the diagram hull being a line segment for every n:
// the two-copy overlap realizing a violation always contains the endpoints.
// Coincides with BalanceReport::m_balanced when m = 0; strictly weaker for
// m >= 1 (e.g. the triangle rooted at one vertex satisfies this but not the
// all-subsets version).
bool segment_balanced(const EndpointGraph& g);

// Number of permutations of the core labels preserving the core edge set and
// every core's endpoint-attachment set (endpoints fixed pointwise). Exhaustive
// search over r! permutations.
long automorphism_count(const EndpointGraph& g);

// Critical decay exponent max((r-1)/(e(G)-a_m(G)), r/e(G)).
Rational critical_exponent(const EndpointGraph& g);

}  // namespace rcm
