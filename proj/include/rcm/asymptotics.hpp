#pragma once

#include <optional>
#include <string>
#include <utility>

#include "rcm/graph.hpp"
#include "rcm/partitions.hpp"
#include "rcm/rational.hpp"

namespace rcm {

// Exponent pair of a single diagram's contribution F(rho) ~ lambda^|rho| *
// c_lambda^e(rho_G): returns (|rho|, e(rho_G)).
std::pair<int, int> f_exponents(const EndpointGraph& g, const SetPartition& p);

// Growth exponent q(n, alpha) with kappa_n(N_G) ~ lambda^q under
// c_lambda = lambda^-alpha, valid when the boundary is a segment (g is
// m-balanced; throws NotMBalanced otherwise). With a = a_m(G), e = e(G) and
// t = (r-1)/(e-a):
//   alpha < t:  q = 1 + (r-1) n - alpha (n e - (n-1) a)
//   alpha = t:  q = 1 - alpha a
//   alpha > t:  q = r - alpha e
Rational cumulant_order(const EndpointGraph& g, int n, const Rational& alpha);

// Exponent delta with Delta_lambda ~ lambda^delta (the cumulant-method rate):
//   alpha < t:  (1 - alpha a) / 2
//   alpha = t:  (e - r a) / (2 (e - a))
//   alpha > t:  (r - alpha e) / 2
Rational delta_exponent(const EndpointGraph& g, const Rational& alpha);

// Kolmogorov-distance rate delta / (2r - 1); requires the normal regime.
Rational kolmogorov_exponent(const EndpointGraph& g, const Rational& alpha);

enum class Phase { Normal, PoissonCritical, Subcritical, NotCovered };

const char* phase_name(Phase p);

struct RegimeReport {
    Rational alpha;
    Rational alpha_star;  // max((r-1)/(e-a), r/e)
    Rational threshold;   // (r-1)/(e-a)
    Phase phase = Phase::NotCovered;
    std::optional<Rational> delta_exponent;       // set when Normal
    std::optional<Rational> kolmogorov_exponent;  // set when Normal
};

// Phase classification at c_lambda = lambda^-alpha:
//   Normal          alpha < alpha*, condition (m-balance) holds, and the rate
//                   exponent delta is strictly positive
//   PoissonCritical alpha = r/e with m-balance and (m = 0 or a*r < e)
//   Subcritical     alpha > r/e with m-balance and (m = 0 or a*r < e)
//   NotCovered      anything else (m-balance failing, boundary cases, or
//                   heavy endpoint attachment with a*r >= e)
RegimeReport classify_regime(const EndpointGraph& g, const Rational& alpha);

// 2 exp(-1/4 min(x^2 / 2^r, (x Delta)^(1/r))); value in (0, 2].
double concentration_bound(double x, double delta_lambda, int r);

std::string regime_json(const RegimeReport& rep);

}  // namespace rcm
