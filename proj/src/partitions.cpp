#include "rcm/partitions.hpp"

#include <algorithm>
#include <map>

namespace rcm {

std::vector<std::vector<std::pair<int, int>>> SetPartition::blocks() const {
    std::vector<std::vector<std::pair<int, int>>> out(static_cast<std::size_t>(block_count()));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            out[assign[static_cast<std::size_t>(i) * cols + j]].emplace_back(i + 1, j + 1);
    return out;
}

SetPartition SetPartition::from_blocks(int n, int r,
                                       const std::vector<std::vector<std::pair<int, int>>>& blocks) {
    SetPartition p;
    p.rows = n;
    p.cols = r;
    p.assign.assign(static_cast<std::size_t>(n) * r, 255);
    // Label blocks by their smallest cell in row-major (lexicographic) order.
    std::map<int, std::size_t> by_min;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].empty()) throw MalformedInput("empty block in partition");
        int mn = n * r;
        for (auto [i, j] : blocks[b]) {
            if (i < 1 || i > n || j < 1 || j > r)
                throw MalformedInput("cell outside the grid in partition block");
            mn = std::min(mn, (i - 1) * r + (j - 1));
        }
        if (!by_min.emplace(mn, b).second) throw MalformedInput("blocks are not disjoint");
    }
    std::uint8_t label = 0;
    for (auto& [mn, b] : by_min) {
        for (auto [i, j] : blocks[b]) {
            auto& cell = p.assign[static_cast<std::size_t>(i - 1) * r + (j - 1)];
            if (cell != 255) throw MalformedInput("blocks are not disjoint");
            cell = label;
        }
        ++label;
    }
    for (auto c : p.assign)
        if (c == 255) throw MalformedInput("blocks do not cover the grid");
    return p;
}

std::string SetPartition::str() const {
    auto bs = blocks();
    std::string out;
    for (std::size_t b = 0; b < bs.size(); ++b) {
        if (b) out += ";";
        for (auto [i, j] : bs[b]) out += "(" + std::to_string(i) + "," + std::to_string(j) + ")";
    }
    return out;
}

bool is_nonflat(const SetPartition& p) {
    // block -> row mask; a repeated row inside one block makes it flat
    std::vector<std::uint32_t> rows_of(static_cast<std::size_t>(p.block_count()), 0);
    for (int i = 0; i < p.rows; ++i)
        for (int j = 0; j < p.cols; ++j) {
            auto& mask = rows_of[p.assign[static_cast<std::size_t>(i) * p.cols + j]];
            if ((mask >> i) & 1u) return false;
            mask |= 1u << i;
        }
    return true;
}

bool is_connected(const SetPartition& p) {
    std::vector<int> parent(static_cast<std::size_t>(p.rows));
    for (int i = 0; i < p.rows; ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x];
        return x;
    };
    std::vector<int> anchor(static_cast<std::size_t>(p.block_count()), -1);
    int comps = p.rows;
    for (int i = 0; i < p.rows; ++i)
        for (int j = 0; j < p.cols; ++j) {
            int b = p.assign[static_cast<std::size_t>(i) * p.cols + j];
            if (anchor[b] < 0) {
                anchor[b] = i;
            } else {
                int ra = find(i), rb = find(anchor[b]);
                if (ra != rb) {
                    parent[ra] = rb;
                    --comps;
                }
            }
        }
    return comps == 1;
}

std::uint64_t enumerate_cnf(int n, int r, int budget_cells,
                            const std::function<void(const PartitionView&)>& visit) {
    EnumerationOptions opts;
    opts.budget_cells = budget_cells;
    return detail::enumerate_grid_partitions(n, r, opts, [&](const PartitionView& v) {
        if (visit) visit(v);
    });
}

std::uint64_t enumerate_nonflat(int n, int r, int budget_cells,
                                const std::function<void(const PartitionView&)>& visit) {
    EnumerationOptions opts;
    opts.connected = false;
    opts.budget_cells = budget_cells;
    return detail::enumerate_grid_partitions(n, r, opts, [&](const PartitionView& v) {
        if (visit) visit(v);
    });
}

std::uint64_t count_maximal(int n, int r) {
    if (n < 1 || r < 1) throw MalformedInput("count_maximal needs n >= 1 and r >= 1");
    std::uint64_t out = 1;
    for (int i = 1; i <= n - 1; ++i) out *= static_cast<std::uint64_t>(r);
    for (int i = 1; i <= n - 1; ++i) out *= 1 + static_cast<std::uint64_t>(r - 1) * i;
    return out;
}

std::uint64_t cnf_upper_bound(int n, int r) {
    auto factorial = [](int k) {
        std::uint64_t f = 1;
        for (int i = 2; i <= k; ++i) f *= static_cast<std::uint64_t>(i);
        return f;
    };
    std::uint64_t out = 1;
    for (int i = 0; i < r; ++i) out *= factorial(n);
    for (int i = 0; i < n - 1; ++i) out *= factorial(r);
    return out;
}

}  // namespace rcm
