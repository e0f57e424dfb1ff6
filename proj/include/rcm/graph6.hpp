#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace rcm {

// Dense symmetric 0/1 adjacency matrix over up to 62 vertices.
struct AdjacencyMatrix {
    int n = 0;
    std::vector<std::uint64_t> rows;  // bit j of rows[i] = edge {i, j}, 0-based

    bool at(int i, int j) const { return (rows[i] >> j) & 1u; }
    void set(int i, int j) {
        rows[i] |= 1ull << j;
        rows[j] |= 1ull << i;
    }
    int edge_count() const;
    bool connected() const;

    static AdjacencyMatrix empty(int n) { return AdjacencyMatrix{n, std::vector<std::uint64_t>(n, 0)}; }
};

// Decodes one line of short-form graph6 (n <= 62). Validates the vertex-count
// byte, the payload length and that trailing padding bits are zero; throws
// BadGraph6 otherwise.
AdjacencyMatrix parse_graph6(std::string_view line);

// Short-form graph6 encoding of a symmetric adjacency matrix (n <= 62).
std::string encode_graph6(const AdjacencyMatrix& a);

// Reads a newline-delimited graph6 file, one graph per line; skips an optional
// ">>graph6<<" header and blank lines.
std::vector<AdjacencyMatrix> read_graph6_file(const std::string& path);

}  // namespace rcm
