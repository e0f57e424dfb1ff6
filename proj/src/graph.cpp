#include "rcm/graph.hpp"

#include <algorithm>
#include <sstream>

#include "rcm/errors.hpp"

namespace rcm {

namespace {

std::string edge_str(int a, int b) {
    return std::to_string(a) + "-" + std::to_string(b);
}

}  // namespace

EndpointGraph EndpointGraph::create(int r, int m, std::vector<std::pair<int, int>> edges) {
    if (r < 2) throw AssumptionViolation("core vertex count r must be >= 2, got " + std::to_string(r));
    if (m < 0) throw MalformedInput("endpoint count m must be >= 0");
    if (r + m > 62) throw MalformedInput("graphs above 62 vertices are not supported");

    EndpointGraph g;
    g.r = r;
    g.m = m;
    g.adj_.assign(static_cast<std::size_t>(r + m), 0);

    for (auto& e : edges) {
        if (e.first > e.second) std::swap(e.first, e.second);
        if (e.first < 1 || e.second > r + m)
            throw MalformedInput("edge " + edge_str(e.first, e.second) + " uses a label outside 1.." +
                                 std::to_string(r + m));
        if (e.first == e.second)
            throw MalformedInput("self-loop at vertex " + std::to_string(e.first));
    }
    std::sort(edges.begin(), edges.end());
    for (std::size_t i = 1; i < edges.size(); ++i)
        if (edges[i] == edges[i - 1])
            throw MalformedInput("duplicate edge " + edge_str(edges[i].first, edges[i].second));

    for (auto [a, b] : edges) {
        if (a > r && b > r)
            throw AssumptionViolation("endpoints " + std::to_string(a) + " and " + std::to_string(b) +
                                      " are adjacent; endpoint vertices must be pairwise non-adjacent");
        g.adj_[a - 1] |= 1ull << (b - 1);
        g.adj_[b - 1] |= 1ull << (a - 1);
    }
    g.edges_ = std::move(edges);

    // Core-induced connectivity via bitmask BFS.
    std::uint64_t core_mask = (1ull << r) - 1;
    std::uint64_t seen = 1, frontier = 1;
    while (frontier) {
        std::uint64_t next = 0;
        for (std::uint64_t f = frontier; f;) {
            int v = __builtin_ctzll(f);
            f &= f - 1;
            next |= g.adj_[v] & core_mask;
        }
        frontier = next & ~seen;
        seen |= next;
    }
    if (seen != core_mask)
        throw AssumptionViolation("the subgraph induced on the core vertices 1.." + std::to_string(r) +
                                  " is not connected");

    for (int j = 1; j <= m; ++j)
        if (g.adj_[r + j - 1] == 0)
            throw AssumptionViolation("endpoint " + std::to_string(r + j) +
                                      " has no incident edge, so the graph is disconnected");
    return g;
}

std::vector<int> EndpointGraph::endpoints_of_core(int i) const {
    std::vector<int> out;
    for (int j = 1; j <= m; ++j)
        if (has_edge(i, r + j)) out.push_back(j);
    return out;
}

std::vector<int> EndpointGraph::cores_of_endpoint(int j) const {
    std::vector<int> out;
    for (int i = 1; i <= r; ++i)
        if (has_edge(i, r + j)) out.push_back(i);
    return out;
}

std::string EndpointGraph::key() const {
    std::string k = std::to_string(r) + "|" + std::to_string(m) + "|";
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        if (i) k += ",";
        k += edge_str(edges_[i].first, edges_[i].second);
    }
    return k;
}

EndpointGraph parse_graph_spec(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string token;
    bool have_r = false, have_m = false, have_edges = false;
    long r = 0, m = 0;
    std::vector<std::pair<int, int>> edges;

    auto parse_long = [](std::string_view s, const char* what) -> long {
        if (s.empty()) throw MalformedInput(std::string("empty value for ") + what);
        char* end = nullptr;
        std::string buf(s);
        long v = std::strtol(buf.c_str(), &end, 10);
        if (end != buf.c_str() + buf.size())
            throw MalformedInput(std::string("bad integer for ") + what + ": '" + buf + "'");
        return v;
    };

    while (in >> token) {
        auto eq = token.find('=');
        if (eq == std::string::npos)
            throw MalformedInput("expected key=value token, got '" + token + "'");
        std::string k = token.substr(0, eq);
        std::string v = token.substr(eq + 1);
        if (k == "r") {
            r = parse_long(v, "r");
            have_r = true;
        } else if (k == "m") {
            m = parse_long(v, "m");
            have_m = true;
        } else if (k == "edges") {
            have_edges = true;
            std::size_t pos = 0;
            while (pos < v.size()) {
                auto comma = v.find(',', pos);
                std::string item = v.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
                auto dash = item.find('-');
                if (dash == std::string::npos || dash == 0 || dash + 1 == item.size())
                    throw MalformedInput("expected edge of the form a-b, got '" + item + "'");
                edges.emplace_back(static_cast<int>(parse_long(item.substr(0, dash), "edge endpoint")),
                                   static_cast<int>(parse_long(item.substr(dash + 1), "edge endpoint")));
                if (comma == std::string::npos) break;
                pos = comma + 1;
            }
        } else {
            throw MalformedInput("unknown key '" + k + "' in graph spec");
        }
    }
    if (!have_r || !have_m || !have_edges)
        throw MalformedInput("graph spec needs r=, m= and edges= (got '" + std::string(text) + "')");
    return EndpointGraph::create(static_cast<int>(r), static_cast<int>(m), std::move(edges));
}

int endpoint_degree_max(const EndpointGraph& g) {
    int best = 0;
    for (int i = 1; i <= g.r; ++i) {
        int cnt = 0;
        for (int j = 1; j <= g.m; ++j)
            if (g.has_edge(i, g.r + j)) ++cnt;
        best = std::max(best, cnt);
    }
    return best;
}

namespace {

// e(H)/v(H) etc. with the 0/0 = 0 convention; positive/0 never arises for the
// quantifier ranges used below.
bool ratio_leq(long n1, long d1, long n2, long d2, bool strict) {
    if (d1 == 0) {
        n1 = 0;
        d1 = 1;
    }
    if (d2 == 0) {
        n2 = 0;
        d2 = 1;
    }
    __int128 lhs = static_cast<__int128>(n1) * d2;
    __int128 rhs = static_cast<__int128>(n2) * d1;
    return strict ? lhs < rhs : lhs <= rhs;
}

}  // namespace

BalanceReport balance_report(const EndpointGraph& g) {
    const int v = g.vertex_count();
    if (v > 20)
        throw BudgetExceeded("balance_report scans all 2^v induced subgraphs; v = " + std::to_string(v) +
                             " exceeds the supported 20");
    const long e = g.edge_count();
    const long a = endpoint_degree_max(g);
    const std::uint64_t full = (1ull << v) - 1;

    BalanceReport rep;
    rep.balanced = rep.strictly_balanced = rep.strongly_balanced = true;
    rep.k2_balanced = rep.m_balanced = true;

    auto record = [&](std::uint64_t subset, const char* predicate) {
        if (rep.witness) return;
        BalanceWitness w;
        w.predicate = predicate;
        for (int i = 0; i < v; ++i)
            if ((subset >> i) & 1u) w.vertices.push_back(i + 1);
        rep.witness = std::move(w);
    };

    for (std::uint64_t subset = 1; subset <= full; ++subset) {
        int vh = __builtin_popcountll(subset);
        long eh = 0;
        for (auto [x, y] : g.edges())
            if (((subset >> (x - 1)) & 1u) && ((subset >> (y - 1)) & 1u)) ++eh;

        if (rep.balanced && !ratio_leq(eh, vh, e, v, false)) {
            rep.balanced = false;
            record(subset, "balanced: e(H)/v(H) <= e(G)/v(G)");
        }
        if (rep.strictly_balanced && subset != full && !ratio_leq(eh, vh, e, v, true))
            rep.strictly_balanced = false;
        if (rep.strongly_balanced && !ratio_leq(eh, vh - 1, e, v - 1, false)) {
            rep.strongly_balanced = false;
            record(subset, "strongly balanced: e(H)/(v(H)-1) <= e(G)/(v(G)-1)");
        }
        if (rep.k2_balanced && vh >= 3 && !ratio_leq(eh - 1, vh - 2, e - 1, v - 2, false)) {
            rep.k2_balanced = false;
            record(subset, "K2-balanced: (e(H)-1)/(v(H)-2) <= (e(G)-1)/(v(G)-2)");
        }
        if (rep.m_balanced && vh >= g.m + 2 && !ratio_leq(eh - a, vh - g.m - 1, e - a, v - g.m - 1, false)) {
            rep.m_balanced = false;
            record(subset, "m-balanced: (e(H)-a)/(v(H)-m-1) <= (e(G)-a)/(v(G)-m-1)");
        }
        if (!rep.balanced && !rep.strictly_balanced && !rep.strongly_balanced && !rep.k2_balanced &&
            !rep.m_balanced)
            break;
    }
    return rep;
}

bool segment_balanced(const EndpointGraph& g) {
    const int v = g.vertex_count();
    if (v > 20) throw BudgetExceeded("segment_balanced scans all induced subgraphs; v too large");
    const long e = g.edge_count();
    const long a = endpoint_degree_max(g);
    std::uint64_t ep_mask = 0;
    for (int j = 1; j <= g.m; ++j) ep_mask |= 1ull << (g.r + j - 1);

    const std::uint64_t full = (1ull << v) - 1;
    for (std::uint64_t subset = 1; subset <= full; ++subset) {
        if ((subset & ep_mask) != ep_mask) continue;
        int vh = __builtin_popcountll(subset);
        if (vh < g.m + 2) continue;
        long eh = 0;
        for (auto [x, y] : g.edges())
            if (((subset >> (x - 1)) & 1u) && ((subset >> (y - 1)) & 1u)) ++eh;
        if (!ratio_leq(eh - a, vh - g.m - 1, e - a, v - g.m - 1, false)) return false;
    }
    return true;
}

long automorphism_count(const EndpointGraph& g) {
    std::vector<int> perm(static_cast<std::size_t>(g.r));
    for (int i = 0; i < g.r; ++i) perm[i] = i + 1;

    // Endpoint-attachment mask per core (bit j-1 = adjacent to endpoint j).
    std::vector<std::uint64_t> attach(static_cast<std::size_t>(g.r), 0);
    for (int i = 1; i <= g.r; ++i)
        for (int j = 1; j <= g.m; ++j)
            if (g.has_edge(i, g.r + j)) attach[i - 1] |= 1ull << (j - 1);

    long count = 0;
    do {
        bool ok = true;
        for (int i = 1; i <= g.r && ok; ++i)
            if (attach[i - 1] != attach[perm[i - 1] - 1]) ok = false;
        for (auto [x, y] : g.edges()) {
            if (!ok) break;
            if (x <= g.r && y <= g.r && !g.has_edge(perm[x - 1], perm[y - 1])) ok = false;
        }
        if (ok) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

Rational critical_exponent(const EndpointGraph& g) {
    long e = g.edge_count();
    long a = endpoint_degree_max(g);
    Rational lhs(g.r - 1, e - a);
    Rational rhs(g.r, e);
    return lhs > rhs ? lhs : rhs;
}

}  // namespace rcm
