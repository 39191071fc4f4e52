#pragma once

#include "qhw/hurwitz.hpp"
#include "qhw/measures.hpp"
#include "qhw/series.hpp"
#include "qhw/weights.hpp"

namespace qhw {

/// Weighted double Hurwitz number H^d_G(mu, nu): sum over canonical
/// configurations of total colength d of the weight of the colength
/// partition times the pure Hurwitz number with the configuration's profiles
/// appended to (mu, nu).
inline Rational weighted_hurwitz(int d, const WeightModel& model, std::optional<Rational> q,
                                 const Partition& mu, const Partition& nu) {
    if (d < 0) throw DomainError("weighted_hurwitz: negative d");
    if (mu.weight() != nu.weight()) throw DomainError("weighted_hurwitz: weights differ");
    if (d == 0) return hurwitz({mu, nu});
    const int n = mu.weight();
    Rational total = 0;
    for (const BranchingConfig& config : enumerate_configs(n, d)) {
        const Rational w = weight_on_Pd(model, lambda_map(config), q);
        if (w == 0) continue;
        std::vector<Partition> profiles = config.profiles;
        profiles.push_back(mu);
        profiles.push_back(nu);
        total += w * hurwitz(profiles);
    }
    return total;
}

/// Same sum with each weight expanded as a truncated series in q or eps.
inline LaurentSeries weighted_hurwitz_series(int d, const WeightModel& model, Var var,
                                             const Partition& mu, const Partition& nu, int order) {
    if (var != Var::q && var != Var::eps)
        throw DomainError("weighted_hurwitz_series: var must be q or eps");
    if (d < 0) throw DomainError("weighted_hurwitz_series: negative d");
    if (mu.weight() != nu.weight()) throw DomainError("weighted_hurwitz_series: weights differ");
    if (d == 0) return LaurentSeries::constant(var, hurwitz({mu, nu}), order);
    const int n = mu.weight();
    LaurentSeries total = LaurentSeries::zero(var, order);
    for (const BranchingConfig& config : enumerate_configs(n, d)) {
        const Partition lam = lambda_map(config);
        std::vector<Partition> profiles = config.profiles;
        profiles.push_back(mu);
        profiles.push_back(nu);
        const Rational h = hurwitz(profiles);
        if (h == 0) continue;
        const LaurentSeries w = var == Var::q ? weight_q_series(model, lam, order)
                                              : weight_eps_series(model, lam, order);
        total = total + w.scaled(h);
    }
    return total;
}

/// Expectation of the pure Hurwitz number under the configuration measure:
/// H^d_G(mu, nu) / Z_G(d).
inline Rational hurwitz_expectation(int d, const WeightModel& model, std::optional<Rational> q,
                                    const Partition& mu, const Partition& nu) {
    const Rational z = partition_function(d, model, q);
    if (z == 0) throw DomainError("hurwitz_expectation: zero normalizer");
    return weighted_hurwitz(d, model, q, mu, nu) / z;
}

}  // namespace qhw
