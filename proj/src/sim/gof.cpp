#include "rcm/sim/gof.hpp"

#include <cmath>

#include "rcm/errors.hpp"

namespace rcm::sim {

double poisson_tv(const std::map<long long, std::uint64_t>& histogram, std::uint64_t total,
                  double mean) {
    if (total == 0) throw MalformedInput("poisson_tv needs a nonempty histogram");
    if (mean < 0) throw MalformedInput("Poisson mean must be nonnegative");

    // TV = 1/2 sum_k |p_hat(k) - pi(k)|; bins outside the histogram contribute
    // their full Poisson mass.
    long long max_bin = histogram.empty() ? 0 : histogram.rbegin()->first;
    long long kmax =
        std::max(max_bin, static_cast<long long>(mean + 60.0 * std::sqrt(mean + 1.0) + 60.0));
    double pmf = std::exp(-mean);
    double covered = 0, acc = 0;
    for (long long k = 0; k <= kmax; ++k) {
        auto it = histogram.find(k);
        double emp = it == histogram.end() ? 0.0 : static_cast<double>(it->second) / total;
        acc += std::fabs(emp - pmf);
        covered += pmf;
        pmf *= mean / static_cast<double>(k + 1);
    }
    // histogram bins below zero (cannot be Poisson mass)
    for (auto& [bin, cnt] : histogram)
        if (bin < 0) acc += static_cast<double>(cnt) / total;
    acc += std::max(0.0, 1.0 - covered);  // residual Poisson tail
    return 0.5 * acc;
}

double poisson_gof(const EmpiricalStats& stats, double mean) {
    return poisson_tv(stats.histogram, stats.counts.size(), mean);
}

}  // namespace rcm::sim
