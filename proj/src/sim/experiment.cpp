#include "rcm/sim/experiment.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <thread>

#include "rcm/sim/count.hpp"
#include "rcm/sim/sampler.hpp"

namespace rcm::sim {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct CentralSums {
    double c2 = 0, c3 = 0, c4 = 0;
};

// k-statistics (unbiased cumulant estimators) from central power sums over n
// observations.
struct KStats {
    double k1 = 0, k2 = 0, k3 = 0, k4 = 0;
};

KStats kstats(double mean, const CentralSums& c, double n) {
    KStats k;
    k.k1 = mean;
    if (n >= 2) k.k2 = c.c2 / (n - 1);
    if (n >= 3) k.k3 = n * c.c3 / ((n - 1) * (n - 2));
    if (n >= 4) k.k4 = (n * (n + 1) * c.c4 - 3 * (n - 1) * c.c2 * c.c2) / ((n - 1) * (n - 2) * (n - 3));
    return k;
}

}  // namespace

double EmpiricalStats::skewness() const {
    if (!k2 || *k2 <= 0 || !k3) return 0.0;
    return *k3 / std::pow(*k2, 1.5);
}

double EmpiricalStats::fraction_zero() const {
    std::uint64_t zeros = 0;
    for (auto c : counts)
        if (c == 0) ++zeros;
    return static_cast<double>(zeros) / replications();
}

EmpiricalStats run_experiment(const SimConfig& cfg, const EndpointGraph& g) {
    cfg.validate();
    EmpiricalStats stats;
    stats.aut = automorphism_count(g);
    stats.counts.assign(static_cast<std::size_t>(cfg.replications), 0);

    // Workers pull replication indices; results land in their slot, so the
    // aggregate is independent of scheduling.
    std::atomic<int> next{0};
    auto work = [&]() {
        for (;;) {
            int rep = next.fetch_add(1);
            if (rep >= cfg.replications) return;
            RcmSample sample(cfg, static_cast<std::uint64_t>(rep));
            stats.counts[static_cast<std::size_t>(rep)] = count_subgraphs(sample, g);
        }
    };
    if (cfg.threads <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < cfg.threads; ++t) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }

    const double R = stats.replications();
    double sum = 0;
    for (auto c : stats.counts) sum += static_cast<double>(c);
    const double mean = sum / R;

    std::vector<double> dev(stats.counts.size());
    CentralSums cs;
    double c1 = 0;
    for (std::size_t i = 0; i < stats.counts.size(); ++i) {
        double d = static_cast<double>(stats.counts[i]) - mean;
        dev[i] = d;
        c1 += d;
        cs.c2 += d * d;
        cs.c3 += d * d * d;
        cs.c4 += d * d * d * d;
    }

    KStats k = kstats(mean, cs, R);
    stats.k1 = k.k1;
    if (R >= 2) stats.k2 = k.k2;
    if (R >= 3) stats.k3 = k.k3;
    if (R >= 4) stats.k4 = k.k4;

    // Jackknife standard errors from delete-one k-statistics; the delete-one
    // central sums follow from the binomial shift d_j -> d_j + d_i/(R-1).
    if (R >= 3) {
        const double n1 = R - 1;
        double s1 = 0, s2 = 0, s3 = 0, s4 = 0;   // sums of theta_i
        double q1 = 0, q2 = 0, q3 = 0, q4 = 0;   // sums of theta_i^2
        for (std::size_t i = 0; i < dev.size(); ++i) {
            double d = dev[i];
            double t = d / n1;
            double r1 = c1 - d;
            double r2 = cs.c2 - d * d;
            double r3 = cs.c3 - d * d * d;
            double r4 = cs.c4 - d * d * d * d;
            double e2 = r2 + 2 * t * r1 + t * t * n1;
            double e3 = r3 + 3 * t * r2 + 3 * t * t * r1 + t * t * t * n1;
            double e4 = r4 + 4 * t * r3 + 6 * t * t * r2 + 4 * t * t * t * r1 + t * t * t * t * n1;
            KStats ki = kstats(mean - t, CentralSums{e2, e3, e4}, n1);
            s1 += ki.k1;
            q1 += ki.k1 * ki.k1;
            s2 += ki.k2;
            q2 += ki.k2 * ki.k2;
            s3 += ki.k3;
            q3 += ki.k3 * ki.k3;
            s4 += ki.k4;
            q4 += ki.k4 * ki.k4;
        }
        auto jack_se = [&](double s, double q) {
            double var = (q - s * s / R) * (R - 1) / R;
            return var > 0 ? std::sqrt(var) : 0.0;
        };
        stats.se_k1 = jack_se(s1, q1);
        if (R >= 3) stats.se_k2 = jack_se(s2, q2);
        if (R >= 4) stats.se_k3 = jack_se(s3, q3);
        if (R >= 5) stats.se_k4 = jack_se(s4, q4);
    } else {
        stats.se_k1 = R >= 2 ? std::sqrt(*stats.k2 / R) : 0.0;
    }

    for (auto c : stats.counts) {
        double q = static_cast<double>(c) / static_cast<double>(stats.aut);
        long long bin = std::llround(q);
        if (std::fabs(q - static_cast<double>(bin)) > 1e-9) ++stats.rounding_flags;
        ++stats.histogram[bin];
    }
    return stats;
}

std::string EmpiricalStats::json() const {
    std::string out = "{";
    out += "\"replications\":" + std::to_string(counts.size());
    out += ",\"aut\":" + std::to_string(aut);
    out += ",\"k1\":" + fmt(k1);
    out += ",\"se_k1\":" + fmt(se_k1);
    if (k2) out += ",\"k2\":" + fmt(*k2);
    if (se_k2) out += ",\"se_k2\":" + fmt(*se_k2);
    if (k3) out += ",\"k3\":" + fmt(*k3);
    if (se_k3) out += ",\"se_k3\":" + fmt(*se_k3);
    if (k4) out += ",\"k4\":" + fmt(*k4);
    if (se_k4) out += ",\"se_k4\":" + fmt(*se_k4);
    if (k2) out += ",\"skewness\":" + fmt(skewness());
    out += ",\"fraction_zero\":" + fmt(fraction_zero());
    out += ",\"rounding_flags\":" + std::to_string(rounding_flags);
    out += ",\"histogram\":{";
    bool first = true;
    for (auto& [bin, cnt] : histogram) {
        if (!first) out += ",";
        first = false;
        out += "\"" + std::to_string(bin) + "\":" + std::to_string(cnt);
    }
    out += "}}";
    return out;
}

std::string EmpiricalStats::counts_csv() const {
    std::string out = "replication,count\n";
    for (std::size_t i = 0; i < counts.size(); ++i)
        out += std::to_string(i) + "," + std::to_string(counts[i]) + "\n";
    return out;
}

}  // namespace rcm::sim
