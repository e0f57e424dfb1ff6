#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "rcm/errors.hpp"

namespace rcm {

// Set partition of the grid [n] x [r]; cells are stored row-major and blocks
// are labeled in restricted-growth order, which coincides with ordering the
// blocks by their lexicographically smallest cell.
struct SetPartition {
    int rows = 0;
    int cols = 0;
    std::vector<std::uint8_t> assign;  // cell (i,j) -> block id, index (i-1)*cols + (j-1)

    int block_count() const {
        int mx = -1;
        for (auto b : assign) mx = std::max<int>(mx, b);
        return mx + 1;
    }

    // Blocks as 1-indexed (row, col) cells, in block-label order.
    std::vector<std::vector<std::pair<int, int>>> blocks() const;

    // Builds from explicit blocks, validating that they are disjoint, nonempty
    // and cover the grid; block labels are normalized to smallest-cell order.
    static SetPartition from_blocks(int n, int r,
                                    const std::vector<std::vector<std::pair<int, int>>>& blocks);

    std::string str() const;  // "(1,1)(2,1);(1,2);..." for debugging and CSV
};

// No block holds two cells of the same row.
bool is_nonflat(const SetPartition& p);

// The hypergraph on rows, linked by multi-row blocks, has one component.
bool is_connected(const SetPartition& p);

struct EnumerationOptions {
    bool nonflat = true;
    bool connected = true;
    int budget_cells = 12;  // throw BudgetExceeded beyond this
};

// Lightweight view passed to enumeration visitors; valid only during the call.
struct PartitionView {
    int rows, cols, block_count;
    const std::uint8_t* assign;

    SetPartition materialize() const {
        return SetPartition{rows, cols,
                            std::vector<std::uint8_t>(assign, assign + rows * static_cast<std::size_t>(cols))};
    }
};

namespace detail {

// Restricted-growth enumeration in lexicographic order. Non-flat pruning is
// applied inline (a cell never joins a block already holding a same-row cell);
// connectivity is tracked by union-find over rows with the admissible
// early-exit that fewer remaining cells than components-1 cannot connect.
template <class Visitor>
class GridEnumerator {
public:
    GridEnumerator(int n, int r, const EnumerationOptions& opts, Visitor& visit)
        : n_(n), r_(r), cells_(n * r), opts_(opts), visit_(visit) {
        assign_.assign(static_cast<std::size_t>(cells_), 0);
        block_rows_.assign(static_cast<std::size_t>(cells_), 0);
        anchor_.assign(static_cast<std::size_t>(cells_), -1);
        parent_.resize(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) parent_[i] = i;
        comps_ = n;
    }

    std::uint64_t run() {
        rec(0, 0);
        return count_;
    }

private:
    int find(int x) {
        while (parent_[x] != x) x = parent_[x];
        return x;
    }

    void rec(int idx, int used) {
        if (idx == cells_) {
            if (!opts_.connected || comps_ == 1) {
                ++count_;
                visit_(PartitionView{n_, r_, used, assign_.data()});
            }
            return;
        }
        const int row = idx / r_;
        for (int b = 0; b <= used; ++b) {
            const bool existing = b < used;
            const bool row_taken = existing && ((block_rows_[b] >> row) & 1u);
            if (opts_.nonflat && row_taken) continue;

            // A join to an existing block of another row links row components;
            // same-row joins (flat mode) change nothing in the row graph.
            int union_child = -1;
            if (existing && !row_taken) {
                int ra = find(row), rb = find(anchor_[b]);
                if (ra != rb) {
                    parent_[ra] = rb;
                    --comps_;
                    union_child = ra;
                }
            }
            const std::uint32_t saved_rows = block_rows_[b];
            const int saved_anchor = anchor_[b];
            assign_[idx] = static_cast<std::uint8_t>(b);
            block_rows_[b] |= 1u << row;
            if (anchor_[b] < 0) anchor_[b] = row;

            if (!(opts_.connected && comps_ - 1 > cells_ - idx - 1))
                rec(idx + 1, existing ? used : used + 1);

            block_rows_[b] = saved_rows;
            anchor_[b] = saved_anchor;
            if (union_child >= 0) {
                parent_[union_child] = union_child;
                ++comps_;
            }
        }
    }

    int n_, r_, cells_;
    EnumerationOptions opts_;
    Visitor& visit_;
    std::vector<std::uint8_t> assign_;
    std::vector<std::uint32_t> block_rows_;
    std::vector<int> anchor_;
    std::vector<int> parent_;
    int comps_ = 0;
    std::uint64_t count_ = 0;
};

template <class Visitor>
std::uint64_t enumerate_grid_partitions(int n, int r, const EnumerationOptions& opts, Visitor&& visit) {
    if (n < 1 || r < 1) throw MalformedInput("grid dimensions must be positive");
    if (n > 16 || static_cast<long>(n) * r > 255)
        throw BudgetExceeded("grid too large for the enumerator's fixed-width state");
    if (n * r > opts.budget_cells)
        throw BudgetExceeded("grid has " + std::to_string(n * r) + " cells, budget is " +
                             std::to_string(opts.budget_cells));
    GridEnumerator<std::remove_reference_t<Visitor>> e(n, r, opts, visit);
    return e.run();
}

}  // namespace detail

// Streams exactly the connected non-flat partitions CNF(n, r) in deterministic
// lexicographic order; returns the total count.
std::uint64_t enumerate_cnf(int n, int r, int budget_cells,
                            const std::function<void(const PartitionView&)>& visit);

// Non-flat partitions only (the index set of the moment expansion).
std::uint64_t enumerate_nonflat(int n, int r, int budget_cells,
                                const std::function<void(const PartitionView&)>& visit);

// The closed product formula r^(n-1) * prod_{i=1}^{n-1} (1 + (r-1) i) for the
// number of connected non-flat partitions with the maximal block count
// 1 + (r-1) n. Beware: the identity holds for n <= 2 only; its row-by-row
// recursion attaches each new row by a single cell and so misses maximal
// partitions whose last-row removal disconnects the rest (enumeration gives
// 32 at n=3, r=2 against the formula's 24).
std::uint64_t count_maximal(int n, int r);

// Upper bound n!^r * r!^(n-1) on |CNF(n,r)|.
std::uint64_t cnf_upper_bound(int n, int r);

}  // namespace rcm
