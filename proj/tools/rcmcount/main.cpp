// rcmcount: subgraph-count asymptotics and simulation for the Poisson
// random-connection model. Subcommands: enumerate, hull, census, classify,
// simulate, moments.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "rcm/asymptotics.hpp"
#include "rcm/census.hpp"
#include "rcm/errors.hpp"
#include "rcm/graph.hpp"
#include "rcm/graph6.hpp"
#include "rcm/hull.hpp"
#include "rcm/partitions.hpp"
#include "rcm/sim/experiment.hpp"
#include "rcm/sim/gof.hpp"
#include "rcm/sim/moments.hpp"

namespace {

struct Output {
    std::string path;  // empty = stdout

    void write(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream out(path, std::ios::binary);
        if (!out) throw rcm::MalformedInput("cannot open output file '" + path + "'");
        out << text;
    }
};

struct KernelFlags {
    std::string name = "constant";
    double r0 = 0.0;
    double scale = 1.0;

    void attach(CLI::App* cmd) {
        cmd->add_option("--kernel", name, "connection function: constant, indicator, exponential");
        cmd->add_option("--r0", r0, "indicator kernel range");
        cmd->add_option("--scale", scale, "exponential kernel decay scale");
    }
};

rcm::sim::SimConfig build_config(double lambda, const std::string& alpha, std::optional<double> c,
                                 const KernelFlags& kf, double L, int dim, int reps,
                                 std::uint64_t seed, int threads,
                                 const std::vector<std::string>& endpoint_args,
                                 const rcm::EndpointGraph& g) {
    rcm::sim::SimConfig cfg;
    cfg.dim = dim;
    cfg.L = L;
    cfg.lambda = lambda;
    if (c && !alpha.empty()) throw rcm::MalformedInput("give either --alpha or --c, not both");
    if (c)
        cfg.c = *c;
    else if (!alpha.empty())
        cfg.c = rcm::sim::c_from_alpha(lambda, rcm::Rational::parse(alpha));
    else
        throw rcm::MalformedInput("simulation needs --alpha p/q or --c");
    cfg.kernel = rcm::sim::KernelSpec::parse(kf.name, kf.r0, kf.scale);
    cfg.replications = reps;
    cfg.seed = seed;
    cfg.threads = threads;

    for (const auto& text : endpoint_args) {
        std::array<double, 3> y{0, 0, 0};
        std::stringstream ss(text);
        std::string tok;
        int axis = 0;
        while (std::getline(ss, tok, ',')) {
            if (axis >= dim) throw rcm::MalformedInput("endpoint '" + text + "' has too many axes");
            y[axis++] = std::stod(tok);
        }
        if (axis != dim)
            throw rcm::MalformedInput("endpoint '" + text + "' needs " + std::to_string(dim) +
                                      " coordinates");
        cfg.endpoints.push_back(y);
    }
    if (static_cast<int>(cfg.endpoints.size()) != g.m)
        throw rcm::MalformedInput("template has m = " + std::to_string(g.m) + " endpoints; got " +
                                  std::to_string(cfg.endpoints.size()) + " --endpoint flags");
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"subgraph-count asymptotics and simulation for the random-connection model"};
    app.require_subcommand(1);

    // ---- enumerate ----
    auto* enumerate = app.add_subcommand("enumerate", "list connected non-flat grid partitions");
    int en_n = 2, en_r = 2, en_budget = rcm::kDefaultBudgetCells;
    bool en_count_only = false;
    std::string en_filter = "cnf";
    Output en_out;
    enumerate->add_option("--n", en_n, "rows (template copies)")->required();
    enumerate->add_option("--r", en_r, "columns (core vertices)")->required();
    enumerate->add_option("--budget", en_budget, "cell budget for exhaustive enumeration");
    enumerate->add_option("--filter", en_filter, "cnf (default), nonflat or all");
    enumerate->add_flag("--count-only", en_count_only, "print only the count");
    enumerate->add_option("--out", en_out.path, "write to file instead of stdout");

    // ---- hull ----
    auto* hull = app.add_subcommand("hull", "planar diagram set and its upper boundary");
    std::string hu_graph, hu_format = "csv";
    int hu_n = 2, hu_budget = rcm::kDefaultBudgetCells;
    Output hu_out;
    hull->add_option("--graph", hu_graph, "template, e.g. \"r=3 m=0 edges=1-2,2-3,3-1\"")->required();
    hull->add_option("--n", hu_n, "number of template copies")->required();
    hull->add_option("--format", hu_format, "csv, json or svg");
    hull->add_option("--budget", hu_budget, "cell budget");
    hull->add_option("--out", hu_out.path, "write to file instead of stdout");

    // ---- census ----
    auto* census_cmd = app.add_subcommand("census", "count endpoint-labeled graph classes");
    int ce_r = 3, ce_m = 0;
    std::string ce_graph6;
    Output ce_out;
    census_cmd->add_option("--r", ce_r, "core vertex count")->required();
    census_cmd->add_option("--m", ce_m, "endpoint count")->required();
    census_cmd->add_option("--graph6", ce_graph6, "graph6 file of connected graphs on r+m vertices");
    census_cmd->add_option("--out", ce_out.path, "write to file instead of stdout");

    // ---- classify ----
    auto* classify = app.add_subcommand("classify", "normal/poisson/subcritical phase report");
    std::string cl_graph, cl_alpha;
    Output cl_out;
    classify->add_option("--graph", cl_graph, "template spec")->required();
    classify->add_option("--alpha", cl_alpha, "decay exponent as an exact rational p/q")->required();
    classify->add_option("--out", cl_out.path, "write to file instead of stdout");

    // ---- simulate ----
    auto* simulate = app.add_subcommand("simulate", "Monte Carlo subgraph counting");
    std::string si_graph, si_alpha, si_format = "json";
    std::optional<double> si_c;
    double si_lambda = 10, si_L = 1;
    int si_d = 2, si_reps = 100, si_threads = 1;
    std::uint64_t si_seed = 0;
    KernelFlags si_kernel;
    std::vector<std::string> si_endpoints;
    Output si_out;
    simulate->add_option("--graph", si_graph, "template spec")->required();
    simulate->add_option("--lambda", si_lambda, "point process intensity")->required();
    simulate->add_option("--alpha", si_alpha, "decay exponent p/q (sets c = lambda^-alpha)");
    simulate->add_option("--c", si_c, "kernel rescaling in (0,1], alternative to --alpha");
    si_kernel.attach(simulate);
    simulate->add_option("--L", si_L, "torus side length");
    simulate->add_option("--d", si_d, "dimension (1-3)");
    simulate->add_option("--reps", si_reps, "replications");
    simulate->add_option("--seed", si_seed, "master seed");
    simulate->add_option("--threads", si_threads, "worker threads");
    simulate->add_option("--endpoint", si_endpoints, "fixed endpoint location x,y[,z] (repeatable)");
    simulate->add_option("--format", si_format, "json (stats) or csv (per-replication counts)");
    simulate->add_option("--out", si_out.path, "write to file instead of stdout");

    // ---- moments ----
    auto* moments = app.add_subcommand("moments", "exact moment/cumulant evaluation");
    std::string mo_graph, mo_alpha;
    std::optional<double> mo_c;
    double mo_lambda = 10, mo_L = 1;
    int mo_d = 2, mo_n = 1, mo_budget = rcm::kDefaultBudgetCells;
    std::uint64_t mo_seed = 0, mo_mc = 100000;
    bool mo_cumulant = false;
    KernelFlags mo_kernel;
    std::vector<std::string> mo_endpoints;
    Output mo_out;
    moments->add_option("--graph", mo_graph, "template spec")->required();
    moments->add_option("--n", mo_n, "moment/cumulant order")->required();
    moments->add_option("--lambda", mo_lambda, "point process intensity")->required();
    moments->add_option("--alpha", mo_alpha, "decay exponent p/q");
    moments->add_option("--c", mo_c, "kernel rescaling, alternative to --alpha");
    mo_kernel.attach(moments);
    moments->add_option("--L", mo_L, "torus side length");
    moments->add_option("--d", mo_d, "dimension (1-3)");
    moments->add_option("--mc", mo_mc, "Monte Carlo samples per integral");
    moments->add_option("--seed", mo_seed, "integration seed");
    moments->add_option("--budget", mo_budget, "cell budget");
    moments->add_flag("--cumulant", mo_cumulant, "sum connected partitions only");
    moments->add_option("--endpoint", mo_endpoints, "fixed endpoint location (repeatable)");
    moments->add_option("--out", mo_out.path, "write to file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (*enumerate) {
            rcm::EnumerationOptions opts;
            opts.budget_cells = en_budget;
            if (en_filter == "cnf") {
                opts.nonflat = opts.connected = true;
            } else if (en_filter == "nonflat") {
                opts.nonflat = true;
                opts.connected = false;
            } else if (en_filter == "all") {
                opts.nonflat = opts.connected = false;
            } else {
                throw rcm::MalformedInput("unknown --filter '" + en_filter + "'");
            }
            std::string text;
            std::uint64_t count = rcm::detail::enumerate_grid_partitions(
                en_n, en_r, opts, [&](const rcm::PartitionView& v) {
                    if (!en_count_only) text += v.materialize().str() + "\n";
                });
            if (en_count_only) text = std::to_string(count) + "\n";
            en_out.write(text);
        } else if (*hull) {
            auto g = rcm::parse_graph_spec(hu_graph);
            auto s = rcm::sigma_set(g, hu_n, hu_budget);
            auto chain = rcm::upper_hull(s);
            if (hu_format == "csv") {
                hu_out.write(rcm::sigma_csv(s, chain));
            } else if (hu_format == "svg") {
                hu_out.write(rcm::sigma_svg(s, chain));
            } else if (hu_format == "json") {
                std::string text = "{\"n\":" + std::to_string(s.n) + ",\"points\":[";
                for (std::size_t i = 0; i < s.points.size(); ++i) {
                    if (i) text += ",";
                    text += "[" + std::to_string(s.points[i].x) + "," +
                            std::to_string(s.points[i].y) + "]";
                }
                text += "],\"hull\":[";
                for (std::size_t i = 0; i < chain.vertices.size(); ++i) {
                    if (i) text += ",";
                    text += "[" + std::to_string(chain.vertices[i].x) + "," +
                            std::to_string(chain.vertices[i].y) + "]";
                }
                text += "],\"is_segment\":";
                text += rcm::is_segment(chain) ? "true" : "false";
                text += "}\n";
                hu_out.write(text);
            } else {
                throw rcm::MalformedInput("unknown --format '" + hu_format + "'");
            }
        } else if (*census_cmd) {
            auto source = ce_graph6.empty() ? rcm::connected_graph_classes(ce_r + ce_m)
                                            : rcm::read_graph6_file(ce_graph6);
            auto row = rcm::census(ce_r, ce_m, source);
            ce_out.write(std::to_string(row.r) + "," + std::to_string(row.m) + "," +
                         std::to_string(row.trees) + "," + std::to_string(row.balanced) + "," +
                         std::to_string(row.admissible) + "\n");
        } else if (*classify) {
            auto g = rcm::parse_graph_spec(cl_graph);
            auto rep = rcm::classify_regime(g, rcm::Rational::parse(cl_alpha));
            cl_out.write(rcm::regime_json(rep) + "\n");
        } else if (*simulate) {
            auto g = rcm::parse_graph_spec(si_graph);
            auto cfg = build_config(si_lambda, si_alpha, si_c, si_kernel, si_L, si_d, si_reps,
                                    si_seed, si_threads, si_endpoints, g);
            auto stats = rcm::sim::run_experiment(cfg, g);
            if (si_format == "json")
                si_out.write(stats.json() + "\n");
            else if (si_format == "csv")
                si_out.write(stats.counts_csv());
            else
                throw rcm::MalformedInput("unknown --format '" + si_format + "'");
        } else if (*moments) {
            auto g = rcm::parse_graph_spec(mo_graph);
            auto cfg = build_config(mo_lambda, mo_alpha, mo_c, mo_kernel, mo_L, mo_d, 1, mo_seed, 1,
                                    mo_endpoints, g);
            auto est = mo_cumulant ? rcm::sim::exact_cumulant(g, mo_n, cfg, mo_mc, mo_budget)
                                   : rcm::sim::exact_moment(g, mo_n, cfg, mo_mc, mo_budget);
            char buf[96];
            std::snprintf(buf, sizeof buf, "{\"value\":%.17g,\"se\":%.17g}\n", est.value, est.se);
            mo_out.write(buf);
        }
    } catch (const rcm::MalformedInput& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const rcm::Error& e) {
        std::cerr << "error[" << e.code() << "]: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
