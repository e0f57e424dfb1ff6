#include "rcm/asymptotics.hpp"

#include <cmath>

#include "rcm/diagrams.hpp"
#include "rcm/errors.hpp"

namespace rcm {

std::pair<int, int> f_exponents(const EndpointGraph& g, const SetPartition& p) {
    DiagramGraph d = quotient_graph(g, p);
    return {d.block_count, d.e};
}

namespace {

// The growth formulas need the upper boundary to be one segment, which holds
// exactly when the balance inequality is satisfied by every induced subgraph
// containing the endpoints.
void require_segment_boundary(const EndpointGraph& g) {
    if (!segment_balanced(g))
        throw NotMBalanced(
            "an endpoint-containing induced subgraph violates "
            "(e(H)-a)/(v(H)-m-1) <= (e(G)-a)/(v(G)-m-1), so the upper boundary is not a segment");
}

void require_positive(const Rational& alpha) {
    if (!alpha.positive()) throw MalformedInput("decay exponent alpha must be positive");
}

}  // namespace

Rational cumulant_order(const EndpointGraph& g, int n, const Rational& alpha) {
    require_positive(alpha);
    if (n < 1) throw MalformedInput("cumulant order n must be >= 1");
    require_segment_boundary(g);
    const long e = g.edge_count();
    const long a = endpoint_degree_max(g);
    const Rational threshold(g.r - 1, e - a);
    if (alpha < threshold)
        return Rational(1 + static_cast<long>(g.r - 1) * n) - alpha * Rational(n * e - (n - 1) * a);
    if (alpha == threshold) return Rational(1) - alpha * Rational(a);
    return Rational(g.r) - alpha * Rational(e);
}

Rational delta_exponent(const EndpointGraph& g, const Rational& alpha) {
    require_positive(alpha);
    require_segment_boundary(g);
    const long e = g.edge_count();
    const long a = endpoint_degree_max(g);
    const Rational threshold(g.r - 1, e - a);
    if (alpha < threshold) return (Rational(1) - alpha * Rational(a)) / Rational(2);
    if (alpha == threshold) return Rational(e - g.r * a, 2 * (e - a));
    return (Rational(g.r) - alpha * Rational(e)) / Rational(2);
}

Rational kolmogorov_exponent(const EndpointGraph& g, const Rational& alpha) {
    RegimeReport rep = classify_regime(g, alpha);
    if (rep.phase != Phase::Normal)
        throw NotNormalRegime("Kolmogorov rate is only defined in the normal regime; phase is " +
                              std::string(phase_name(rep.phase)));
    return *rep.kolmogorov_exponent;
}

const char* phase_name(Phase p) {
    switch (p) {
        case Phase::Normal: return "Normal";
        case Phase::PoissonCritical: return "PoissonCritical";
        case Phase::Subcritical: return "Subcritical";
        case Phase::NotCovered: return "NotCovered";
    }
    return "NotCovered";
}

RegimeReport classify_regime(const EndpointGraph& g, const Rational& alpha) {
    require_positive(alpha);
    const long e = g.edge_count();
    const long a = endpoint_degree_max(g);

    RegimeReport rep;
    rep.alpha = alpha;
    rep.threshold = Rational(g.r - 1, e - a);
    rep.alpha_star = critical_exponent(g);
    rep.phase = Phase::NotCovered;

    if (!segment_balanced(g)) return rep;

    const Rational poisson_alpha(g.r, e);
    // The first-/second-moment containment results and the Poisson limit both
    // need the endpoint load to stay subcritical: a * r < e (vacuous at m = 0).
    const bool light_endpoints = (g.m == 0) || (a * g.r < e);

    if (alpha < rep.alpha_star) {
        Rational delta = delta_exponent(g, alpha);
        if (delta.positive()) {
            rep.phase = Phase::Normal;
            rep.delta_exponent = delta;
            rep.kolmogorov_exponent = delta / Rational(2 * g.r - 1);
        }
        return rep;
    }
    if (alpha == poisson_alpha && light_endpoints) {
        rep.phase = Phase::PoissonCritical;
        return rep;
    }
    if (alpha > poisson_alpha && light_endpoints) {
        rep.phase = Phase::Subcritical;
        return rep;
    }
    return rep;
}

double concentration_bound(double x, double delta_lambda, int r) {
    if (x < 0 || delta_lambda <= 0 || r < 2)
        throw MalformedInput("concentration_bound needs x >= 0, Delta > 0, r >= 2");
    double quad = x * x / std::ldexp(1.0, r);                       // x^2 / 2^r
    double lin = std::pow(x * delta_lambda, 1.0 / r);               // (x Delta)^(1/r)
    return 2.0 * std::exp(-0.25 * std::min(quad, lin));
}

std::string regime_json(const RegimeReport& rep) {
    std::string out = "{";
    out += "\"alpha\":\"" + rep.alpha.str() + "\",";
    out += "\"alpha_star\":\"" + rep.alpha_star.str() + "\",";
    out += "\"threshold\":\"" + rep.threshold.str() + "\",";
    out += "\"phase\":\"" + std::string(phase_name(rep.phase)) + "\"";
    if (rep.delta_exponent) out += ",\"delta_exponent\":\"" + rep.delta_exponent->str() + "\"";
    if (rep.kolmogorov_exponent)
        out += ",\"kolmogorov_exponent\":\"" + rep.kolmogorov_exponent->str() + "\"";
    out += "}";
    return out;
}

}  // namespace rcm
