#include "rcm/sim/count.hpp"

#include <algorithm>

#include "rcm/errors.hpp"

namespace rcm::sim {

namespace {

// Assignment order over template cores: start at the most constrained core
// (endpoint degree, then total degree) and grow through the connected core
// graph so every later core has at least one placed template-neighbor.
std::vector<int> assignment_order(const EndpointGraph& g) {
    std::vector<int> order;
    std::vector<char> placed(static_cast<std::size_t>(g.r + 1), 0);
    auto score = [&](int v) {
        int ep = static_cast<int>(g.endpoints_of_core(v).size());
        int deg = __builtin_popcountll(g.adjacency_mask(v));
        return ep * 100 + deg;
    };
    int first = 1;
    for (int v = 2; v <= g.r; ++v)
        if (score(v) > score(first)) first = v;
    order.push_back(first);
    placed[first] = 1;
    while (static_cast<int>(order.size()) < g.r) {
        int best = -1, best_score = -1;
        for (int v = 1; v <= g.r; ++v) {
            if (placed[v]) continue;
            bool touches = false;
            for (int u : order)
                if (g.has_edge(u, v)) touches = true;
            if (!touches) continue;
            if (score(v) > best_score) {
                best = v;
                best_score = score(v);
            }
        }
        order.push_back(best);
        placed[best] = 1;
    }
    return order;
}

struct Counter {
    const EndpointGraph& g;
    const Adjacency& adj;
    std::vector<int> order;                      // template cores in placement order
    std::vector<std::vector<int>> prev_nbrs;     // indices into `order` adjacent to slot k
    std::vector<std::uint32_t> required_ep;      // endpoint mask required at slot k
    std::vector<std::uint32_t> assigned;         // point chosen at each slot
    std::vector<char> used;
    std::size_t words;
    std::vector<std::vector<std::uint64_t>> slot_bits;  // adjacency bitset of each placed point
    std::uint64_t total = 0;

    Counter(const EndpointGraph& g_, const Adjacency& adj_, std::size_t n)
        : g(g_), adj(adj_), order(assignment_order(g_)), words(n / 64 + 1) {
        prev_nbrs.resize(order.size());
        required_ep.assign(order.size(), 0);
        assigned.resize(order.size());
        used.assign(n, 0);
        slot_bits.assign(order.size(), std::vector<std::uint64_t>(words, 0));
        for (std::size_t k = 0; k < order.size(); ++k) {
            for (std::size_t p = 0; p < k; ++p)
                if (g.has_edge(order[p], order[k])) prev_nbrs[k].push_back(static_cast<int>(p));
            for (int j : g.endpoints_of_core(order[k])) required_ep[k] |= 1u << (j - 1);
        }
    }

    bool slot_edge(int slot, std::uint32_t cand) const {
        return (slot_bits[slot][cand / 64] >> (cand % 64)) & 1u;
    }

    void place(std::size_t k) {
        if (k == order.size()) {
            ++total;
            return;
        }
        const std::uint32_t need = required_ep[k];
        if (k == 0) {
            if (need) {
                // cheapest filter first: walk the points pinned to one endpoint
                int j = __builtin_ctz(need);
                for (std::uint32_t cand : adj.ep_points[j]) try_place(k, cand, need);
            } else {
                for (std::uint32_t cand = 0; cand < used.size(); ++cand) try_place(k, cand, need);
            }
            return;
        }
        // candidates: neighbors of the placed template-neighbor with the
        // shortest adjacency list; other placed neighbors checked by bitset
        int best = prev_nbrs[k][0];
        for (int p : prev_nbrs[k])
            if (adj.nbr[assigned[p]].size() < adj.nbr[assigned[best]].size()) best = p;
        for (std::uint32_t cand : adj.nbr[assigned[best]]) try_place(k, cand, need, best);
    }

    void try_place(std::size_t k, std::uint32_t cand, std::uint32_t need, int skip = -1) {
        if (used[cand]) return;
        if ((adj.ep_mask[cand] & need) != need) return;
        for (int p : prev_nbrs[k]) {
            if (p == skip) continue;
            if (!slot_edge(p, cand)) return;
        }
        used[cand] = 1;
        assigned[k] = cand;
        if (k + 1 < order.size()) {
            // materialize this point's adjacency bitset only if a later slot
            // will consult it
            auto& bits = slot_bits[k];
            std::fill(bits.begin(), bits.end(), 0);
            for (std::uint32_t nb : adj.nbr[cand]) bits[nb / 64] |= 1ull << (nb % 64);
        }
        place(k + 1);
        used[cand] = 0;
    }
};

}  // namespace

std::uint64_t count_subgraphs(const RcmSample& sample, const EndpointGraph& g, const Adjacency& adj) {
    if (static_cast<int>(sample.config().endpoints.size()) != g.m)
        throw DimensionMismatch("config carries " + std::to_string(sample.config().endpoints.size()) +
                                " endpoint locations, template has m = " + std::to_string(g.m));
    if (sample.size() < static_cast<std::size_t>(g.r)) return 0;
    Counter c(g, adj, sample.size());
    c.place(0);
    return c.total;
}

std::uint64_t count_subgraphs(const RcmSample& sample, const EndpointGraph& g) {
    Adjacency adj = Adjacency::build(sample);
    return count_subgraphs(sample, g, adj);
}

}  // namespace rcm::sim
