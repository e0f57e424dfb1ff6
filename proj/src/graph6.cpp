#include "rcm/graph6.hpp"

#include <fstream>

#include "rcm/errors.hpp"

namespace rcm {

int AdjacencyMatrix::edge_count() const {
    int twice = 0;
    for (auto r : rows) twice += __builtin_popcountll(r);
    return twice / 2;
}

bool AdjacencyMatrix::connected() const {
    if (n == 0) return false;
    std::uint64_t full = (1ull << n) - 1;
    std::uint64_t seen = 1, frontier = 1;
    while (frontier) {
        std::uint64_t next = 0;
        for (std::uint64_t f = frontier; f;) {
            int v = __builtin_ctzll(f);
            f &= f - 1;
            next |= rows[v];
        }
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == full;
}

AdjacencyMatrix parse_graph6(std::string_view line) {
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
    if (line.empty()) throw BadGraph6("empty graph6 line");
    for (char c : line)
        if (c < 63 || c > 126)
            throw BadGraph6("graph6 bytes must lie in the printable range 63..126");

    unsigned char first = static_cast<unsigned char>(line[0]);
    if (first == 126) throw BadGraph6("long-form vertex counts (n > 62) are not supported");
    int n = first - 63;

    int bits = n * (n - 1) / 2;
    std::size_t want = 1 + static_cast<std::size_t>((bits + 5) / 6);
    if (line.size() != want)
        throw BadGraph6("graph6 line for n = " + std::to_string(n) + " must be " + std::to_string(want) +
                        " bytes, got " + std::to_string(line.size()));

    auto a = AdjacencyMatrix::empty(n);
    // Upper-triangle bit order (0,1),(0,2),(1,2),(0,3),... big-endian in each
    // 6-bit group.
    int bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            int byte = 1 + bit / 6;
            int shift = 5 - bit % 6;
            if ((static_cast<unsigned char>(line[byte]) - 63) >> shift & 1) a.set(i, j);
        }
    }
    // Padding bits after the triangle must be zero.
    for (int pad = bits; pad < 6 * static_cast<int>(want - 1); ++pad) {
        int byte = 1 + pad / 6;
        int shift = 5 - pad % 6;
        if ((static_cast<unsigned char>(line[byte]) - 63) >> shift & 1)
            throw BadGraph6("nonzero padding bits in graph6 line");
    }
    return a;
}

std::string encode_graph6(const AdjacencyMatrix& a) {
    if (a.n < 0 || a.n > 62) throw BadGraph6("short-form graph6 supports 0 <= n <= 62");
    int bits = a.n * (a.n - 1) / 2;
    std::string out(1 + static_cast<std::size_t>((bits + 5) / 6), static_cast<char>(63));
    out[0] = static_cast<char>(a.n + 63);
    int bit = 0;
    for (int j = 1; j < a.n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            if (a.at(i, j)) out[1 + bit / 6] += static_cast<char>(1 << (5 - bit % 6));
        }
    }
    return out;
}

std::vector<AdjacencyMatrix> read_graph6_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MalformedInput("cannot open graph6 file '" + path + "'");
    std::vector<AdjacencyMatrix> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line.rfind(">>graph6<<", 0) == 0) line = line.substr(10);
        if (line.empty()) continue;
        out.push_back(parse_graph6(line));
    }
    return out;
}

}  // namespace rcm
