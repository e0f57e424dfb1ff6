#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rcm/graph.hpp"
#include "rcm/rational.hpp"

namespace rcm {

struct SigmaPoint {
    int x = 0;
    int y = 0;
    friend bool operator==(SigmaPoint a, SigmaPoint b) { return a.x == b.x && a.y == b.y; }
    friend bool operator<(SigmaPoint a, SigmaPoint b) { return a.x != b.x ? a.x < b.x : a.y < b.y; }
};

// The planar image of CNF(n, r) under rho -> (nr+m-v(rho_G), ne(G)-e(rho_G)),
// deduplicated and sorted lexicographically; multiplicity counts how many
// diagrams map to each point.
struct SigmaSet {
    int n = 0;
    std::vector<SigmaPoint> points;
    std::vector<std::uint64_t> multiplicity;  // parallel to points

    std::uint64_t multiplicity_of(SigmaPoint p) const;
};

inline constexpr int kDefaultBudgetCells = 12;

// Enumerates CNF(n, g.r) once and collects the point set. Results are memoized
// per (template, n) within the process. n >= 2.
SigmaSet sigma_set(const EndpointGraph& g, int n, int budget_cells = kDefaultBudgetCells);

// Upper boundary of the convex hull: vertex chain with strictly decreasing
// slopes, x strictly increasing. Collinear boundary points are not vertices.
struct HullChain {
    std::vector<SigmaPoint> vertices;
};

HullChain upper_hull(const SigmaSet& s);

// True iff the whole upper boundary is one line segment (or a single point).
bool is_segment(const HullChain& c);

// Whether a point lies on the boundary polyline (vertex or collinear).
bool on_boundary(const HullChain& c, SigmaPoint p);

// Incoming/outgoing boundary slopes at a boundary point: +infinity before the
// left end, 0 after the right end, and the containing edge's slope on both
// sides for a collinear interior point. Throws NotOnBoundary otherwise.
struct SlopePair {
    Slope incoming;  // theta-
    Slope outgoing;  // theta+ (never infinite)
};
SlopePair local_slopes(const HullChain& c, SigmaPoint p);

// Boundary points whose slopes satisfy theta- >= 1/alpha and theta+ <= 1/alpha
// under the parametrization c_lambda = lambda^-alpha: exactly the points whose
// diagrams dominate the cumulant sum. Sorted by x; never empty.
std::vector<SigmaPoint> leading_points(const EndpointGraph& g, int n, const Rational& alpha,
                                       int budget_cells = kDefaultBudgetCells);

// CSV rows "x,y,multiplicity,on_boundary" (header included).
std::string sigma_csv(const SigmaSet& s, const HullChain& c);

// Scatter of the sigma set with the upper boundary drawn as a red polyline.
std::string sigma_svg(const SigmaSet& s, const HullChain& c);

}  // namespace rcm
