#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "rcm/rational.hpp"

namespace rcm::sim {

enum class KernelKind { Constant, Indicator, Exponential };

// Connection function H on the torus. The probability of an edge between
// points at squared distance d2 is c * value(d2).
struct KernelSpec {
    KernelKind kind = KernelKind::Constant;
    double r0 = 0.0;     // indicator range
    double scale = 1.0;  // exponential decay scale

    double value(double d2) const {
        switch (kind) {
            case KernelKind::Constant: return 1.0;
            case KernelKind::Indicator: return d2 <= r0 * r0 ? 1.0 : 0.0;
            case KernelKind::Exponential: return std::exp(-std::sqrt(d2) / scale);
        }
        return 0.0;
    }

    static KernelSpec parse(const std::string& name, double r0, double scale);
    const char* name() const;
};

struct SimConfig {
    int dim = 2;
    double L = 1.0;         // torus side, window [0, L)^dim with periodic metric
    double lambda = 1.0;    // intensity per unit volume
    double c = 1.0;         // kernel rescaling c_lambda in (0, 1]
    KernelSpec kernel;
    std::vector<std::array<double, 3>> endpoints;  // fixed locations, one per template endpoint
    int replications = 1;
    std::uint64_t seed = 0;
    int threads = 1;

    double volume() const { return std::pow(L, dim); }
    double mean_points() const { return lambda * volume(); }

    // Throws MalformedInput when a field is out of range.
    void validate() const;
};

// c_lambda = lambda^-alpha evaluated in double.
double c_from_alpha(double lambda, const Rational& alpha);

}  // namespace rcm::sim
