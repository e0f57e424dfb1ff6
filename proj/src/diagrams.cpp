#include "rcm/diagrams.hpp"

#include <algorithm>

#include "rcm/errors.hpp"

namespace rcm {

namespace {

void check_dims(const EndpointGraph& g, const SetPartition& p) {
    if (p.cols != g.r)
        throw DimensionMismatch("partition has " + std::to_string(p.cols) + " columns, template has r = " +
                                std::to_string(g.r) + " cores");
}

}  // namespace

DiagramGraph quotient_graph(const EndpointGraph& g, const SetPartition& p) {
    check_dims(g, p);
    DiagramGraph d;
    d.block_count = p.block_count();
    d.m = g.m;
    d.v = d.block_count + g.m;

    auto block_of = [&](int row, int col) {  // 0-based
        return static_cast<int>(p.assign[static_cast<std::size_t>(row) * p.cols + col]);
    };

    for (int row = 0; row < p.rows; ++row) {
        for (auto [a, b] : g.edges()) {
            if (b <= g.r) {
                int ba = block_of(row, a - 1), bb = block_of(row, b - 1);
                if (ba == bb) continue;  // self-loop from a flat merge, dropped
                d.edges.emplace_back(std::min(ba, bb) + 1, std::max(ba, bb) + 1);
            } else if (a <= g.r) {
                // core a -- endpoint b; endpoint vertex id = block_count + (b - r)
                d.edges.emplace_back(block_of(row, a - 1) + 1, d.block_count + (b - g.r));
            }
        }
    }
    std::sort(d.edges.begin(), d.edges.end());
    d.edges.erase(std::unique(d.edges.begin(), d.edges.end()), d.edges.end());
    d.e = static_cast<int>(d.edges.size());
    return d;
}

std::pair<int, int> diagram_point(const EndpointGraph& g, const SetPartition& p) {
    DiagramGraph d = quotient_graph(g, p);
    return {p.rows * g.r + g.m - d.v, p.rows * g.edge_count() - d.e};
}

std::vector<std::vector<int>> endpoint_neighborhoods(const EndpointGraph& g, const SetPartition& p) {
    check_dims(g, p);
    std::vector<std::vector<int>> out(static_cast<std::size_t>(g.m));
    for (int j = 1; j <= g.m; ++j) {
        std::vector<char> hit(static_cast<std::size_t>(p.block_count()), 0);
        for (int row = 0; row < p.rows; ++row)
            for (int col = 1; col <= g.r; ++col)
                if (g.has_edge(col, g.r + j))
                    hit[p.assign[static_cast<std::size_t>(row) * p.cols + (col - 1)]] = 1;
        for (std::size_t k = 0; k < hit.size(); ++k)
            if (hit[k]) out[j - 1].push_back(static_cast<int>(k) + 1);
    }
    return out;
}

namespace detail {

QuotientCounter::QuotientCounter(const EndpointGraph& g) : g_(g) {
    for (auto [a, b] : g.edges()) {
        if (b <= g.r)
            core_edges_.emplace_back(a - 1, b - 1);
        else if (a <= g.r)
            endpoint_edges_.emplace_back(b - g.r - 1, a - 1);
    }
    seen_.reserve(64);
}

std::pair<int, int> QuotientCounter::counts(const std::uint8_t* assign, int n, int block_count) {
    seen_.clear();
    auto push = [&](std::uint16_t code) {
        auto it = std::lower_bound(seen_.begin(), seen_.end(), code);
        if (it == seen_.end() || *it != code) seen_.insert(it, code);
    };
    const int stride = g_.r;
    for (int row = 0; row < n; ++row) {
        const std::uint8_t* cells = assign + static_cast<std::size_t>(row) * stride;
        for (auto [a, b] : core_edges_) {
            int ba = cells[a], bb = cells[b];
            if (ba == bb) continue;
            if (ba > bb) std::swap(ba, bb);
            push(static_cast<std::uint16_t>((ba << 8) | bb));
        }
        for (auto [j, a] : endpoint_edges_)
            push(static_cast<std::uint16_t>((cells[a] << 8) | (block_count + j)));
    }
    return {block_count + g_.m, static_cast<int>(seen_.size())};
}

}  // namespace detail

}  // namespace rcm
