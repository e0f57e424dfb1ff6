#include "rcm/hull.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <mutex>

#include "rcm/diagrams.hpp"
#include "rcm/errors.hpp"
#include "rcm/partitions.hpp"

namespace rcm {

std::uint64_t SigmaSet::multiplicity_of(SigmaPoint p) const {
    auto it = std::lower_bound(points.begin(), points.end(), p);
    if (it == points.end() || !(*it == p)) return 0;
    return multiplicity[static_cast<std::size_t>(it - points.begin())];
}

namespace {

std::mutex g_memo_mutex;
std::map<std::pair<std::string, int>, SigmaSet> g_memo;

SigmaSet compute_sigma(const EndpointGraph& g, int n, int budget_cells) {
    std::map<std::pair<int, int>, std::uint64_t> acc;
    detail::QuotientCounter counter(g);
    const int ne = n * g.edge_count();
    const int nrm = n * g.r + g.m;
    EnumerationOptions opts;
    opts.budget_cells = budget_cells;
    detail::enumerate_grid_partitions(n, g.r, opts, [&](const PartitionView& v) {
        auto [qv, qe] = counter.counts(v.assign, n, v.block_count);
        ++acc[{nrm - qv, ne - qe}];
    });

    SigmaSet s;
    s.n = n;
    s.points.reserve(acc.size());
    s.multiplicity.reserve(acc.size());
    for (auto& [pt, mult] : acc) {
        s.points.push_back(SigmaPoint{pt.first, pt.second});
        s.multiplicity.push_back(mult);
    }
    return s;
}

// cross(o->a, o->b); positive when b is counterclockwise from a around o
long long cross(SigmaPoint o, SigmaPoint a, SigmaPoint b) {
    return static_cast<long long>(a.x - o.x) * (b.y - o.y) -
           static_cast<long long>(a.y - o.y) * (b.x - o.x);
}

}  // namespace

SigmaSet sigma_set(const EndpointGraph& g, int n, int budget_cells) {
    if (n < 2) throw MalformedInput("sigma_set needs n >= 2");
    auto key = std::make_pair(g.key(), n);
    {
        std::lock_guard<std::mutex> lock(g_memo_mutex);
        auto it = g_memo.find(key);
        if (it != g_memo.end()) return it->second;
    }
    SigmaSet s = compute_sigma(g, n, budget_cells);
    std::lock_guard<std::mutex> lock(g_memo_mutex);
    return g_memo.emplace(std::move(key), std::move(s)).first->second;
}

HullChain upper_hull(const SigmaSet& s) {
    if (s.points.empty()) throw MalformedInput("upper_hull of an empty point set");
    // Monotone chain over points already sorted lexicographically; keep only
    // strict right turns so collinear points drop out of the vertex list.
    HullChain c;
    for (auto p : s.points) {
        while (c.vertices.size() >= 2 &&
               cross(c.vertices[c.vertices.size() - 2], c.vertices.back(), p) >= 0)
            c.vertices.pop_back();
        // For equal x keep only the top point: the incoming sorted order visits
        // the lower one first, so replace it.
        while (!c.vertices.empty() && c.vertices.back().x == p.x) c.vertices.pop_back();
        c.vertices.push_back(p);
    }
    return c;
}

bool is_segment(const HullChain& c) { return c.vertices.size() <= 2; }

bool on_boundary(const HullChain& c, SigmaPoint p) {
    const auto& v = c.vertices;
    if (v.size() == 1) return p == v[0];
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        if (p.x < v[i].x || p.x > v[i + 1].x) continue;
        if (cross(v[i], v[i + 1], p) == 0) return true;
    }
    return false;
}

SlopePair local_slopes(const HullChain& c, SigmaPoint p) {
    const auto& v = c.vertices;
    if (!on_boundary(c, p))
        throw NotOnBoundary("point (" + std::to_string(p.x) + "," + std::to_string(p.y) +
                            ") is not on the upper boundary");
    if (v.size() == 1) return {Slope::pos_inf(), Slope::finite(Rational(0))};

    auto edge_slope = [&](std::size_t i) {
        return Rational(v[i + 1].y - v[i].y, v[i + 1].x - v[i].x);
    };
    if (p == v.front()) return {Slope::pos_inf(), Slope::finite(edge_slope(0))};
    if (p == v.back()) return {Slope::finite(edge_slope(v.size() - 2)), Slope::finite(Rational(0))};
    for (std::size_t i = 1; i + 1 < v.size(); ++i)
        if (p == v[i]) return {Slope::finite(edge_slope(i - 1)), Slope::finite(edge_slope(i))};
    // collinear interior point: both slopes are the containing edge's
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
        if (v[i].x < p.x && p.x < v[i + 1].x && cross(v[i], v[i + 1], p) == 0) {
            auto sl = Slope::finite(edge_slope(i));
            return {sl, sl};
        }
    throw NotOnBoundary("point not located on any boundary edge");
}

std::vector<SigmaPoint> leading_points(const EndpointGraph& g, int n, const Rational& alpha,
                                       int budget_cells) {
    if (!alpha.positive()) throw MalformedInput("leading_points needs alpha > 0");
    SigmaSet s = sigma_set(g, n, budget_cells);
    HullChain c = upper_hull(s);
    Rational inv_alpha = Rational(1) / alpha;
    std::vector<SigmaPoint> out;
    for (auto p : s.points) {
        if (!on_boundary(c, p)) continue;
        SlopePair sp = local_slopes(c, p);
        if (sp.incoming.at_least(inv_alpha) && sp.outgoing.at_most(inv_alpha)) out.push_back(p);
    }
    return out;
}

std::string sigma_csv(const SigmaSet& s, const HullChain& c) {
    std::string out = "x,y,multiplicity,on_boundary\n";
    for (std::size_t i = 0; i < s.points.size(); ++i) {
        out += std::to_string(s.points[i].x) + "," + std::to_string(s.points[i].y) + "," +
               std::to_string(s.multiplicity[i]) + "," + (on_boundary(c, s.points[i]) ? "1" : "0") +
               "\n";
    }
    return out;
}

std::string sigma_svg(const SigmaSet& s, const HullChain& c) {
    int max_x = 1, max_y = 1;
    for (auto p : s.points) {
        max_x = std::max(max_x, p.x);
        max_y = std::max(max_y, p.y);
    }
    const double margin = 40, sx = 480.0 / max_x, sy = 360.0 / max_y;
    auto X = [&](double x) { return margin + x * sx; };
    auto Y = [&](double y) { return margin + 360.0 - y * sy; };
    char buf[160];
    std::string out =
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"560\" height=\"440\" "
        "viewBox=\"0 0 560 440\">\n";
    std::snprintf(buf, sizeof buf,
                  "  <line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" stroke=\"black\"/>\n",
                  X(0), Y(0), X(max_x + 0.5), Y(0));
    out += buf;
    std::snprintf(buf, sizeof buf,
                  "  <line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" stroke=\"black\"/>\n",
                  X(0), Y(0), X(0), Y(max_y + 0.5));
    out += buf;
    out += "  <polyline fill=\"none\" stroke=\"red\" stroke-width=\"2\" points=\"";
    for (auto p : c.vertices) {
        std::snprintf(buf, sizeof buf, "%.1f,%.1f ", X(p.x), Y(p.y));
        out += buf;
    }
    out += "\"/>\n";
    for (auto p : s.points) {
        std::snprintf(buf, sizeof buf, "  <circle cx=\"%.1f\" cy=\"%.1f\" r=\"3\" fill=\"blue\"/>\n",
                      X(p.x), Y(p.y));
        out += buf;
    }
    out += "</svg>\n";
    return out;
}

}  // namespace rcm
