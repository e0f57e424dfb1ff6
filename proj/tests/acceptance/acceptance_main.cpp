// Acceptance suite: runs every release criterion and prints one PASS/FAIL
// line per criterion. Exit status 0 iff all pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "rcm/asymptotics.hpp"
#include "rcm/census.hpp"
#include "rcm/diagrams.hpp"
#include "rcm/graph.hpp"
#include "rcm/hull.hpp"
#include "rcm/partitions.hpp"
#include "rcm/sim/count.hpp"
#include "rcm/sim/experiment.hpp"
#include "rcm/sim/gof.hpp"
#include "rcm/sim/moments.hpp"

using namespace rcm;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void report(int idx, const std::string& name, bool pass, const std::string& detail) {
    std::printf("[%s] criterion %2d: %s (%s)\n", pass ? "PASS" : "FAIL", idx, name.c_str(),
                detail.c_str());
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

template <class Fn>
void run(int idx, const std::string& name, Fn&& fn) {
    auto t0 = Clock::now();
    bool pass = false;
    std::string detail;
    try {
        pass = fn(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%s%.1fs", detail.empty() ? "" : "; ", seconds_since(t0));
    report(idx, name, pass, detail + buf);
}

EndpointGraph triangle() { return parse_graph_spec("r=3 m=0 edges=1-2,2-3,3-1"); }

std::set<std::pair<int, int>> point_set(const SigmaSet& s) {
    std::set<std::pair<int, int>> out;
    for (auto p : s.points) out.insert({p.x, p.y});
    return out;
}

// ---- criteria 1-6: exact combinatorial reproductions ----------------------

bool c1_sigma_sets(std::string& detail) {
    bool ok = point_set(sigma_set(triangle(), 2)) ==
              std::set<std::pair<int, int>>{{3, 3}, {2, 1}, {1, 0}};
    ok = ok && point_set(sigma_set(triangle(), 3)) ==
                   std::set<std::pair<int, int>>{
                       {6, 6}, {5, 4}, {4, 3}, {5, 3}, {4, 2}, {4, 1}, {3, 1}, {3, 0}, {2, 0}};
    auto t0 = Clock::now();
    auto s4 = sigma_set(triangle(), 4);
    double n4_time = seconds_since(t0);
    ok = ok && point_set(s4) == std::set<std::pair<int, int>>{
                                    {9, 9}, {8, 7}, {7, 6}, {8, 6}, {7, 5}, {7, 4}, {6, 4},
                                    {6, 3}, {5, 3}, {7, 3}, {6, 2}, {5, 2}, {7, 2}, {6, 1},
                                    {5, 1}, {4, 1}, {6, 0}, {5, 0}, {4, 0}, {3, 0}};
    ok = ok && n4_time < 30.0;
    char buf[64];
    std::snprintf(buf, sizeof buf, "n=4 in %.2fs", n4_time);
    detail = buf;
    return ok;
}

bool c2_hull_shapes(std::string& detail) {
    auto chain_c3 = upper_hull(sigma_set(triangle(), 3));
    bool ok = is_segment(chain_c3) &&
              chain_c3.vertices == std::vector<SigmaPoint>{{2, 0}, {6, 6}};

    auto rooted = parse_graph_spec("r=3 m=1 edges=1-2,2-3,1-4,3-4");
    auto chain_rooted = upper_hull(sigma_set(rooted, 3));
    ok = ok && is_segment(chain_rooted) &&
         chain_rooted.vertices == std::vector<SigmaPoint>{{2, 2}, {6, 8}};

    auto pendant = parse_graph_spec("r=4 m=0 edges=1-2,2-3,3-4,1-3");
    auto chain_bad = upper_hull(sigma_set(pendant, 2));
    ok = ok && !is_segment(chain_bad) &&
         chain_bad.vertices == std::vector<SigmaPoint>{{1, 0}, {3, 3}, {4, 4}};
    detail = "3 boundary shapes";
    return ok;
}

bool c3_census_table(std::string& detail) {
    struct Cell {
        int r, m;
        std::uint64_t t, g, a;
    };
    const std::vector<Cell> table = {
        {2, 0, 1, 1, 1},   {3, 0, 1, 2, 2},    {4, 0, 2, 5, 6},    {5, 0, 3, 14, 21},
        {6, 0, 6, 53, 112}, {2, 1, 1, 2, 2},   {3, 1, 2, 6, 8},    {4, 1, 4, 20, 44},
        {5, 1, 9, 106, 333}, {2, 2, 2, 4, 4},  {3, 2, 2, 6, 27},   {4, 2, 4, 26, 274},
        {2, 3, 2, 6, 6},   {3, 3, 2, 2, 73},   {2, 4, 3, 9, 9},
    };
    int bad = 0;
    for (const auto& cell : table) {
        auto row = census(cell.r, cell.m, connected_graph_classes(cell.r + cell.m));
        if (row.trees != cell.t || row.balanced != cell.g || row.admissible != cell.a) {
            ++bad;
            std::printf("       census mismatch r=%d m=%d: got %llu/%llu/%llu want %llu/%llu/%llu\n",
                        cell.r, cell.m, (unsigned long long)row.trees,
                        (unsigned long long)row.balanced, (unsigned long long)row.admissible,
                        (unsigned long long)cell.t, (unsigned long long)cell.g,
                        (unsigned long long)cell.a);
        }
    }
    detail = std::to_string(table.size()) + " cells";
    return bad == 0;
}

bool c4_counting_formulas(std::string& detail) {
    int checked = 0;
    std::ostringstream mism;
    bool bound_ok = true;
    for (int n = 1; n <= 6; ++n) {
        for (int r = 2; n * r <= 12; ++r) {
            std::uint64_t maximal = 0;
            int target = 1 + (r - 1) * n;
            std::uint64_t total = enumerate_cnf(n, r, 12, [&](const PartitionView& v) {
                if (v.block_count == target) ++maximal;
            });
            if (maximal != count_maximal(n, r))
                mism << " (" << n << "," << r << "):" << maximal << "!=" << count_maximal(n, r);
            if (total > cnf_upper_bound(n, r)) bound_ok = false;
            ++checked;
        }
    }
    std::string mismatches = mism.str();
    detail = std::to_string(checked) + " (n,r) pairs; |CNF| bound " +
             (bound_ok ? "holds" : "VIOLATED");
    if (!mismatches.empty())
        detail += "; |M| formula mismatches (the published identity fails for n >= 3):" + mismatches;
    return bound_ok && mismatches.empty();
}

bool c5_exponent_oracle(std::string& detail) {
    int checked = 0;
    for (auto [r, m] : {std::pair{2, 0}, {3, 0}, {4, 0}, {2, 1}, {3, 1}, {2, 2}}) {
        for (const auto& g : endpoint_graph_classes(r, m)) {
            if (!balance_report(g).m_balanced) continue;
            const long e = g.edge_count();
            const long a = endpoint_degree_max(g);
            Rational t(g.r - 1, e - a);
            Rational top = critical_exponent(g) * Rational(2);
            if (t * Rational(2) > top) top = t * Rational(2);
            std::vector<Rational> grid{t};
            for (int k = 1; k <= 19; ++k) grid.push_back(top * Rational(k, 20));
            for (int n = 1; n <= 3; ++n) {
                // diagram maximum straight from the enumeration
                std::vector<std::pair<int, int>> pairs;  // (|rho|, e(rho_G))
                detail::QuotientCounter qc(g);
                enumerate_cnf(n, g.r, 12, [&](const PartitionView& v) {
                    auto [qv, qe] = qc.counts(v.assign, n, v.block_count);
                    pairs.push_back({qv - g.m, qe});
                });
                for (const auto& alpha : grid) {
                    Rational best(-1000000);
                    for (auto [blocks, edges] : pairs) {
                        Rational expo = Rational(blocks) - alpha * Rational(edges);
                        if (expo > best) best = expo;
                    }
                    if (cumulant_order(g, n, alpha) != best) {
                        detail = "mismatch at " + g.key() + " n=" + std::to_string(n) +
                                 " alpha=" + alpha.str();
                        return false;
                    }
                    ++checked;
                }
            }
        }
    }
    detail = std::to_string(checked) + " exact comparisons";
    return checked > 0;
}

bool c6_segment_iff_balance(std::string& detail) {
    // The geometric test pairs with the balance inequality quantified over
    // endpoint-containing induced subgraphs (identical to the all-subsets
    // predicate at m = 0); the all-subsets predicate stays a sufficient
    // condition and is asserted as such.
    int classes = 0;
    for (auto [r, m] : {std::pair{2, 0}, {3, 0}, {4, 0}, {5, 0}, {2, 1}, {3, 1}, {4, 1},
                        {2, 2}, {3, 2}, {2, 3}}) {
        for (const auto& g : endpoint_graph_classes(r, m)) {
            bool balanced = segment_balanced(g);
            bool segment = is_segment(upper_hull(sigma_set(g, 2, 15))) &&
                           is_segment(upper_hull(sigma_set(g, 3, 15)));
            if (balanced != segment) {
                detail = "equivalence fails for " + g.key();
                return false;
            }
            if (balance_report(g).m_balanced && !segment) {
                detail = "sufficiency fails for " + g.key();
                return false;
            }
            ++classes;
        }
    }
    detail = std::to_string(classes) + " endpoint-labeled classes";
    return classes > 0;
}

// ---- criteria 7-10: seeded Monte Carlo validations -------------------------

constexpr std::uint64_t kSeed = 20250809;

bool c7_moment_match(std::string& detail) {
    auto k2 = parse_graph_spec("r=2 m=0 edges=1-2");
    sim::SimConfig cfg;
    cfg.dim = 2;
    cfg.L = 1.0;
    cfg.lambda = 50.0;
    cfg.c = 0.1;  // constant kernel with p = 0.1
    cfg.kernel = sim::KernelSpec{sim::KernelKind::Constant, 0, 1};
    cfg.replications = 2000;
    cfg.threads = 2;
    cfg.seed = kSeed;
    auto stats = sim::run_experiment(cfg, k2);
    double mean_err = std::fabs(stats.k1 - 250.0);
    double var_err = std::fabs(*stats.k2 - 5500.0);
    char buf[128];
    std::snprintf(buf, sizeof buf, "mean %.1f (SE %.2f), var %.0f (SE %.0f)", stats.k1,
                  stats.se_k1, *stats.k2, *stats.se_k2);
    detail = buf;
    return mean_err <= 3 * stats.se_k1 && var_err <= 3 * *stats.se_k2;
}

bool c8_poisson_limit(std::string& detail) {
    auto c3 = triangle();
    const double L = 2.0, r0 = 0.87;  // sized so the limit mean sits in 1..3
    std::vector<double> lambdas = {100, 200, 400};
    std::vector<double> tvs;
    std::ostringstream note;
    for (double lambda : lambdas) {
        sim::SimConfig cfg;
        cfg.dim = 2;
        cfg.L = L;
        cfg.lambda = lambda;
        cfg.c = 1.0 / lambda;  // c_lambda = lambda^-1, the r/e(C3) critical decay
        cfg.kernel = sim::KernelSpec{sim::KernelKind::Indicator, r0, 1};
        cfg.replications = 5000;
        cfg.threads = 2;
        cfg.seed = kSeed + static_cast<std::uint64_t>(lambda);
        auto mu = sim::exact_moment(c3, 1, cfg, 200000);
        double mu_hat = mu.value / 6.0;  // |Aut(C3)| = 6
        auto stats = sim::run_experiment(cfg, c3);
        double tv = sim::poisson_gof(stats, mu_hat);
        tvs.push_back(tv);
        note << "lambda=" << lambda << " mu=" << mu_hat << " tv=" << tv << "  ";
    }
    detail = note.str();
    return tvs[0] > tvs[1] && tvs[1] > tvs[2] && tvs[2] < 0.08;
}

bool c9_normal_shape(std::string& detail) {
    auto c3 = triangle();
    std::vector<double> lambdas = {50, 100, 200};
    std::vector<double> skews;
    std::ostringstream note;
    for (double lambda : lambdas) {
        sim::SimConfig cfg;
        cfg.dim = 2;
        cfg.L = 2.8;  // the skewness prefactor decays like (lambda L^2)^(-1/2)
        cfg.lambda = lambda;
        cfg.c = std::pow(lambda, -0.5);  // alpha = 1/2
        cfg.kernel = sim::KernelSpec{sim::KernelKind::Constant, 0, 1};
        cfg.replications = 2000;
        cfg.threads = 2;
        cfg.seed = kSeed + 77 + static_cast<std::uint64_t>(lambda);
        auto stats = sim::run_experiment(cfg, c3);
        skews.push_back(std::fabs(stats.skewness()));
        note << "lambda=" << lambda << " |skew|=" << skews.back() << "  ";
    }
    detail = note.str();
    return skews[0] > skews[1] && skews[1] > skews[2] && skews[2] < 0.25;
}

bool c10_containment(std::string& detail) {
    auto c3 = triangle();
    std::ostringstream note;
    // alpha = 6/5 subcritical: P(N > 0) shrinks along the ladder; the window
    // is sized so the first rung starts near mean 1 and the decay is visible
    std::vector<double> p_pos;
    for (double lambda : {50.0, 100.0, 200.0}) {
        sim::SimConfig cfg;
        cfg.dim = 2;
        cfg.L = 2.0;
        cfg.lambda = lambda;
        cfg.c = std::pow(lambda, -1.2);
        cfg.kernel = sim::KernelSpec{sim::KernelKind::Constant, 0, 1};
        cfg.replications = 2000;
        cfg.threads = 2;
        cfg.seed = kSeed + 900 + static_cast<std::uint64_t>(lambda);
        auto stats = sim::run_experiment(cfg, c3);
        p_pos.push_back(stats.fraction_positive());
        note << "a=6/5 l=" << lambda << " P+=" << p_pos.back() << "  ";
    }
    // alpha = 4/5 supercritical for containment: P(N = 0) shrinks
    std::vector<double> p_zero;
    for (double lambda : {50.0, 100.0, 200.0}) {
        sim::SimConfig cfg;
        cfg.dim = 2;
        cfg.L = 1.0;
        cfg.lambda = lambda;
        cfg.c = std::pow(lambda, -0.8);
        cfg.kernel = sim::KernelSpec{sim::KernelKind::Constant, 0, 1};
        cfg.replications = 2000;
        cfg.threads = 2;
        cfg.seed = kSeed + 1900 + static_cast<std::uint64_t>(lambda);
        auto stats = sim::run_experiment(cfg, c3);
        p_zero.push_back(stats.fraction_zero());
        note << "a=4/5 l=" << lambda << " P0=" << p_zero.back() << "  ";
    }
    detail = note.str();
    return p_pos[0] > p_pos[1] && p_pos[1] > p_pos[2] && p_zero[0] > p_zero[1] &&
           p_zero[1] > p_zero[2];
}

}  // namespace

int main() {
    run(1, "sigma-set golden values", c1_sigma_sets);
    run(2, "upper-boundary shapes", c2_hull_shapes);
    run(3, "endpoint-graph census table", c3_census_table);
    run(4, "counting formulas", c4_counting_formulas);
    run(5, "closed-form vs brute-force exponents", c5_exponent_oracle);
    run(6, "segment criterion iff balance condition", c6_segment_iff_balance);
    run(7, "edge-count moment match", c7_moment_match);
    run(8, "poisson limit at critical decay", c8_poisson_limit);
    run(9, "normal-regime skewness decay", c9_normal_shape);
    run(10, "containment thresholds", c10_containment);

    if (g_failures == 0) {
        std::printf("all criteria passed\n");
        return 0;
    }
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
}
