#include "rcm/sim/config.hpp"

#include "rcm/errors.hpp"

namespace rcm::sim {

KernelSpec KernelSpec::parse(const std::string& name, double r0, double scale) {
    KernelSpec k;
    if (name == "constant") {
        k.kind = KernelKind::Constant;
    } else if (name == "indicator") {
        if (r0 <= 0) throw MalformedInput("indicator kernel needs a range r0 > 0");
        k.kind = KernelKind::Indicator;
        k.r0 = r0;
    } else if (name == "exponential") {
        if (scale <= 0) throw MalformedInput("exponential kernel needs a scale > 0");
        k.kind = KernelKind::Exponential;
        k.scale = scale;
    } else {
        throw MalformedInput("unknown kernel '" + name + "'; expected constant, indicator or exponential");
    }
    return k;
}

const char* KernelSpec::name() const {
    switch (kind) {
        case KernelKind::Constant: return "constant";
        case KernelKind::Indicator: return "indicator";
        case KernelKind::Exponential: return "exponential";
    }
    return "?";
}

void SimConfig::validate() const {
    if (dim < 1 || dim > 3) throw MalformedInput("dimension must be 1, 2 or 3");
    if (L <= 0) throw MalformedInput("torus side L must be positive");
    if (lambda <= 0) throw MalformedInput("intensity lambda must be positive");
    if (!(c > 0.0 && c <= 1.0)) throw MalformedInput("kernel scale c must lie in (0, 1]");
    if (replications < 1) throw MalformedInput("replications must be >= 1");
    if (threads < 1) throw MalformedInput("threads must be >= 1");
    for (const auto& y : endpoints)
        for (int a = 0; a < dim; ++a)
            if (y[a] < 0 || y[a] >= L)
                throw MalformedInput("endpoint coordinates must lie in [0, L)");
    if (kernel.kind == KernelKind::Indicator && kernel.r0 <= 0)
        throw MalformedInput("indicator kernel needs r0 > 0");
}

double c_from_alpha(double lambda, const Rational& alpha) {
    return std::pow(lambda, -alpha.to_double());
}

}  // namespace rcm::sim
