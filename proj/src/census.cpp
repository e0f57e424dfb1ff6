#include "rcm/census.hpp"

#include <algorithm>
#include <set>

#include "rcm/errors.hpp"

namespace rcm {

namespace {

// Upper-triangle pair index for 0-based i < j.
int pair_index(int i, int j) { return j * (j - 1) / 2 + i; }

std::uint64_t edge_mask_of(const AdjacencyMatrix& a) {
    std::uint64_t mask = 0;
    for (int j = 1; j < a.n; ++j)
        for (int i = 0; i < j; ++i)
            if (a.at(i, j)) mask |= 1ull << pair_index(i, j);
    return mask;
}

std::uint64_t permute_mask(std::uint64_t mask, const std::vector<int>& perm, int n) {
    std::uint64_t out = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if ((mask >> pair_index(i, j)) & 1u) {
                int pi = perm[i], pj = perm[j];
                if (pi > pj) std::swap(pi, pj);
                out |= 1ull << pair_index(pi, pj);
            }
    return out;
}

std::uint64_t canonical_mask(std::uint64_t mask, int n) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::uint64_t best = ~0ull;
    do {
        best = std::min(best, permute_mask(mask, perm, n));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

AdjacencyMatrix from_mask(std::uint64_t mask, int n) {
    auto a = AdjacencyMatrix::empty(n);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if ((mask >> pair_index(i, j)) & 1u) a.set(i, j);
    return a;
}

}  // namespace

std::vector<AdjacencyMatrix> connected_graph_classes(int v) {
    if (v < 1 || v > 7)
        throw MalformedInput("internal generator covers 1..7 vertices; use a graph6 file beyond that");
    // Vertex augmentation: every connected graph on k+1 vertices arises from a
    // connected graph on k by attaching the new vertex to a nonempty subset
    // (delete a non-cut vertex to see this).
    std::vector<std::uint64_t> current{0};  // K1
    for (int k = 1; k < v; ++k) {
        std::set<std::uint64_t> next;
        for (std::uint64_t base : current) {
            for (std::uint64_t attach = 1; attach < (1ull << k); ++attach) {
                std::uint64_t mask = base;
                for (int i = 0; i < k; ++i)
                    if ((attach >> i) & 1u) mask |= 1ull << pair_index(i, k);
                next.insert(canonical_mask(mask, k + 1));
            }
        }
        current.assign(next.begin(), next.end());
    }
    std::vector<AdjacencyMatrix> out;
    out.reserve(current.size());
    for (auto mask : current) out.push_back(from_mask(mask, v));
    return out;
}

namespace {

// Canonical key of an endpoint-labeled configuration: vertices reordered as
// cores then endpoints, minimized over core and endpoint permutations.
std::uint64_t canonical_colored(const AdjacencyMatrix& a, const std::vector<int>& cores,
                                const std::vector<int>& endpoints) {
    const int r = static_cast<int>(cores.size());
    const int m = static_cast<int>(endpoints.size());
    std::vector<int> cperm(static_cast<std::size_t>(r)), eperm(static_cast<std::size_t>(m));
    std::uint64_t best = ~0ull;
    for (int i = 0; i < r; ++i) cperm[i] = i;
    do {
        for (int j = 0; j < m; ++j) eperm[j] = j;
        do {
            std::uint64_t mask = 0;
            int bit = 0;
            for (int j = 1; j < r; ++j)
                for (int i = 0; i < j; ++i, ++bit)
                    if (a.at(cores[cperm[i]], cores[cperm[j]])) mask |= 1ull << bit;
            for (int j = 0; j < m; ++j)
                for (int i = 0; i < r; ++i, ++bit)
                    if (a.at(cores[cperm[i]], endpoints[eperm[j]])) mask |= 1ull << bit;
            best = std::min(best, mask);
        } while (std::next_permutation(eperm.begin(), eperm.end()));
    } while (std::next_permutation(cperm.begin(), cperm.end()));
    return best;
}

EndpointGraph to_endpoint_graph(const AdjacencyMatrix& a, const std::vector<int>& cores,
                                const std::vector<int>& endpoints) {
    const int r = static_cast<int>(cores.size());
    const int m = static_cast<int>(endpoints.size());
    std::vector<int> label(static_cast<std::size_t>(a.n), 0);
    for (int i = 0; i < r; ++i) label[cores[i]] = i + 1;
    for (int j = 0; j < m; ++j) label[endpoints[j]] = r + j + 1;
    std::vector<std::pair<int, int>> edges;
    for (int j = 1; j < a.n; ++j)
        for (int i = 0; i < j; ++i)
            if (a.at(i, j)) edges.emplace_back(std::min(label[i], label[j]), std::max(label[i], label[j]));
    return EndpointGraph::create(r, m, std::move(edges));
}

template <class Fn>
void for_each_admissible(int r, int m, const std::vector<AdjacencyMatrix>& source, Fn&& fn) {
    const int v = r + m;
    std::set<std::uint64_t> seen;
    std::vector<int> subset(static_cast<std::size_t>(m));

    for (const auto& a : source) {
        if (a.n != v)
            throw MalformedInput("source graph has " + std::to_string(a.n) + " vertices, expected " +
                                 std::to_string(v));
        if (!a.connected()) throw MalformedInput("source graph is not connected");

        // iterate m-subsets of [0, v) as endpoint sets
        for (int i = 0; i < m; ++i) subset[i] = i;
        while (true) {
            std::uint64_t ep_mask = 0;
            for (int i = 0; i < m; ++i) ep_mask |= 1ull << subset[i];

            bool independent = true;
            for (int i = 0; i < m && independent; ++i)
                if (a.rows[subset[i]] & ep_mask) independent = false;

            if (independent) {
                std::vector<int> cores;
                for (int x = 0; x < v; ++x)
                    if (!((ep_mask >> x) & 1u)) cores.push_back(x);
                // core-induced connectivity
                std::uint64_t core_mask = ((1ull << v) - 1) & ~ep_mask;
                std::uint64_t start = core_mask & (~core_mask + 1);
                std::uint64_t comp = start, frontier = start;
                while (frontier) {
                    std::uint64_t nxt = 0;
                    for (std::uint64_t f = frontier; f;) {
                        int x = __builtin_ctzll(f);
                        f &= f - 1;
                        nxt |= a.rows[x] & core_mask;
                    }
                    frontier = nxt & ~comp;
                    comp |= nxt;
                }
                if (comp == core_mask) {
                    std::vector<int> endpoints(subset.begin(), subset.end());
                    if (seen.insert(canonical_colored(a, cores, endpoints)).second)
                        fn(to_endpoint_graph(a, cores, endpoints));
                }
            }

            // next m-combination
            if (m == 0) break;
            int i = m - 1;
            while (i >= 0 && subset[i] == v - m + i) --i;
            if (i < 0) break;
            ++subset[i];
            for (int k = i + 1; k < m; ++k) subset[k] = subset[k - 1] + 1;
        }
        if (m == 0) continue;  // the m==0 subset loop ran exactly once
    }
}

}  // namespace

CensusRow census(int r, int m, const std::vector<AdjacencyMatrix>& source) {
    if (source.empty()) throw SourceEmpty("census needs at least one source graph");
    CensusRow row;
    row.r = r;
    row.m = m;
    for_each_admissible(r, m, source, [&](const EndpointGraph& g) {
        ++row.admissible;
        if (balance_report(g).m_balanced) {
            ++row.balanced;
            if (g.edge_count() == g.vertex_count() - 1) ++row.trees;
        }
    });
    return row;
}

std::vector<EndpointGraph> endpoint_graph_classes(int r, int m) {
    std::vector<EndpointGraph> out;
    for_each_admissible(r, m, connected_graph_classes(r + m),
                        [&](const EndpointGraph& g) { out.push_back(g); });
    return out;
}

}  // namespace rcm
