#pragma once

#include "qhw/measures.hpp"
#include "qhw/report.hpp"
#include "qhw/weighted.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace qhw {

/// The two leading semiclassical weight coefficients from the defining
/// symmetrized sums, both normalized by |aut(lambda)| (the normalization is
/// needed for consistency with the exact eps-series; see reports' notes).
/// w1 is returned as the positive sum; comparators apply sign conventions.
inline std::pair<Rational, Rational> w0_w1(const Partition& lam) {
    Rational w0 = 0, w1 = 0;
    detail::for_each_permutation(lam.parts(), [&](const std::vector<int>& a) {
        std::vector<long> partial(a.size());
        long s = 0;
        for (std::size_t j = 0; j < a.size(); ++j) {
            s += a[j];
            partial[j] = s;
        }
        Rational prod = 1;
        for (long p : partial) prod *= p;
        w0 += 1 / prod;
        for (long r : partial) w1 += Rational(r) / prod / 2;
    });
    const Integer aut = stats(lam).aut_order;
    return {w0 / aut, w1 / aut};
}

/// eps-series of the partition function pf_d = sum over lambda of
/// p(lambda) * w(lambda) at q = e^{-eps}; exact through degree order - 1.
inline LaurentSeries pf_eps_series(const WeightModel& model, int d, long order) {
    if (d < 1) throw DomainError("pf_eps_series: d must be positive");
    LaurentSeries total = LaurentSeries::zero(Var::eps, order);
    for (const Partition& lam : enumerate_partitions(d)) {
        Rational plam = 1;
        for (int part : lam.parts()) plam *= partition_count(part);
        total = total + weight_eps_series(model, lam, order).scaled(plam);
    }
    return total;
}

/// q-series of the partition function; exact below `order`.
inline LaurentSeries pf_q_series(const WeightModel& model, int d, long order) {
    if (d < 1) throw DomainError("pf_q_series: d must be positive");
    LaurentSeries total = LaurentSeries::zero(Var::q, order);
    for (const Partition& lam : enumerate_partitions(d)) {
        Rational plam = 1;
        for (int part : lam.parts()) plam *= partition_count(part);
        total = total + weight_q_series(model, lam, order).scaled(plam);
    }
    return total;
}

/// eps-series of the unnormalized symmetrized sum Phi (= |aut| times the
/// weight, unsigned); exact through degree order - 1.
inline LaurentSeries phi_eps_series(const WeightModel& model, const Partition& lam, long order) {
    LaurentSeries s = weight_eps_series(model, lam, order).scaled(stats(lam).aut_order);
    if (model.kind == WeightKind::H && lam.colength() % 2 != 0) s = s.scaled(-1);
    return s;
}

namespace detail {

inline Rational pf_first_order_claim(WeightKind kind, int d) {
    const Integer fdm1 = factorial(d - 1);
    switch (kind) {
        case WeightKind::EPrime: return Rational(3 - d) / (4 * fdm1);
        case WeightKind::E: return Rational(5 + d) / (4 * fdm1);
        case WeightKind::H: return Rational(d + 1) / fdm1;
        default: throw DomainError("pf_first_order_claim: quantum models only");
    }
}

inline Rational gamma2_claim(WeightKind kind, int d) {
    const Integer fdm1 = factorial(d - 1);
    switch (kind) {
        case WeightKind::EPrime: return -Rational(d + 1) / (4 * fdm1);
        case WeightKind::E: return -Rational(3 - d) / (4 * fdm1);
        case WeightKind::H: return Rational(d + 1) / (2 * fdm1);
        default: throw DomainError("gamma2_claim: quantum models only");
    }
}

}  // namespace detail

/// Claimed semiclassical expansion of eps^d * pf_d: 1/d! + eps * c1(model, d).
inline ExpansionClaim claim_pf_semiclassical(const WeightModel& model, int d) {
    ExpansionClaim c;
    c.source_ref = "pf-semiclassical[" + model.tag() + ",d=" + std::to_string(d) + "]";
    c.var = Var::eps;
    c.scale_power = d;
    c.claimed[0] = Rational(1, factorial(d));
    c.claimed[1] = detail::pf_first_order_claim(model.kind, d);
    c.validity = "d >= 1, q = e^{-eps}";
    return c;
}

/// Compares the engine's eps-series of eps^d * pf_d against the claim,
/// through degree `order` >= 1.
inline VerificationReport verify_pf_semiclassical(const WeightModel& model, int d, long order = 1) {
    if (!model.quantum()) throw DomainError("verify_pf_semiclassical: quantum models only");
    if (order < 1) throw DomainError("verify_pf_semiclassical: order must be >= 1");
    const LaurentSeries scaled = pf_eps_series(model, d, std::max(order + 1 - d, 2L)).shifted(d);
    return compare_series(claim_pf_semiclassical(model, d), scaled,
                          "weights normalized by |aut(lambda)|");
}

/// Compares eps^{l(lambda)} * weight_eps_series against w0 + eps * bracket,
/// with the bracket taken both with the literal sign and negated; degree-1
/// rows are labeled "literal" and "negated".
inline VerificationReport verify_weight_semiclassical(const WeightModel& model,
                                                      const Partition& lam) {
    if (!model.quantum()) throw DomainError("verify_weight_semiclassical: quantum models only");
    const int ell = lam.length(), d = lam.weight();
    const auto [w0, w1] = w0_w1(lam);
    Rational bracket;
    switch (model.kind) {
        case WeightKind::EPrime: bracket = w1; break;
        case WeightKind::E: bracket = w1 - d * w0; break;
        case WeightKind::H: bracket = w1 - Rational(ell * (ell + 1)) / 2 * d * w0; break;
        default: throw DomainError("verify_weight_semiclassical: unreachable");
    }
    const LaurentSeries scaled = weight_eps_series(model, lam, 2 - ell).shifted(ell);
    VerificationReport rep;
    rep.claim.source_ref = "weight-semiclassical[" + model.tag() + "," + lam.str() + "]";
    rep.claim.var = Var::eps;
    rep.claim.scale_power = ell;
    rep.claim.claimed = {{0, w0}, {1, bracket}};
    rep.claim.validity = "q = e^{-eps}; w0, w1 include 1/|aut(lambda)|";
    rep.add("order0", 0, w0, scaled.coeff(0));
    rep.add("literal", 1, bracket, scaled.coeff(1));
    rep.add("negated", 1, -bracket, scaled.coeff(1));
    rep.notes = "first-order bracket compared under both sign conventions";
    return rep;
}

/// Compares eps^d * (weighted Hurwitz eps-series) against the claimed
/// combination of simple-branching Hurwitz numbers: order 0 is
/// (1/d!) H(2^d, mu, nu); order 1 (when n >= 4) is
/// (1/(d-1)!) [H(2^{d-1}, 3, mu, nu) + H(2^{d-1}, 2^2, mu, nu)]
/// + gamma2(model, d) H(2^d, mu, nu).
inline VerificationReport verify_hurwitz_semiclassical(const WeightModel& model, int d,
                                                       const Partition& mu, const Partition& nu) {
    if (!model.quantum()) throw DomainError("verify_hurwitz_semiclassical: quantum models only");
    if (d < 1) throw DomainError("verify_hurwitz_semiclassical: d must be positive");
    const int n = mu.weight();
    if (n < 2 * d) throw DomainError("verify_hurwitz_semiclassical: requires n >= 2d");
    ExpansionClaim c;
    c.source_ref = "hurwitz-semiclassical[" + model.tag() + ",d=" + std::to_string(d) + "," +
                   mu.str() + ";" + nu.str() + "]";
    c.var = Var::eps;
    c.scale_power = d;
    c.validity = "n >= 2d, q = e^{-eps}";
    c.claimed[0] = simple_hurwitz(d, mu, nu) / factorial(d);
    const bool first_order = n >= 4;
    if (first_order) {
        const Partition b2 = special_partition(2, 1, n);
        std::vector<Partition> base(static_cast<std::size_t>(d - 1), b2);
        auto with = [&](const Partition& extra) {
            std::vector<Partition> profiles = base;
            profiles.push_back(extra);
            profiles.push_back(mu);
            profiles.push_back(nu);
            return hurwitz(profiles);
        };
        const Rational h3 = with(special_partition(3, 1, n));
        const Rational h22 = with(special_partition(2, 2, n));
        c.claimed[1] = (h3 + h22) / factorial(d - 1) +
                       detail::gamma2_claim(model.kind, d) * simple_hurwitz(d, mu, nu);
    }
    const long order = first_order ? 1 : 0;
    const LaurentSeries scaled =
        weighted_hurwitz_series(d, model, Var::eps, mu, nu, std::max(order + 1 - d, 2L)).shifted(d);
    return compare_series(std::move(c), scaled,
                          first_order ? "order-1 claim transcribed verbatim"
                                      : "order 0 only (n < 4)");
}

/// Zero-temperature partition function: coefficients p(d) at q^d and p(d-1)
/// at q^{d+1}.
inline VerificationReport verify_zero_temp_pf(const WeightModel& model, int d) {
    if (d < 2) throw DomainError("verify_zero_temp_pf: requires d >= 2");
    ExpansionClaim c;
    c.source_ref = "zero-temp-pf[" + model.tag() + ",d=" + std::to_string(d) + "]";
    c.var = Var::q;
    c.scale_power = 0;
    c.claimed[d] = partition_count(d);
    c.claimed[d + 1] = partition_count(d - 1);
    c.validity = "d >= 2";
    return compare_series(std::move(c), pf_q_series(model, d, d + 2));
}

/// Zero-temperature weighted Hurwitz numbers: q^d coefficient is the sum of
/// pure Hurwitz numbers over single colength-d profiles; q^{d+1} coefficient
/// (d >= 2) sums over configurations with colength partition (d-1, 1).
inline VerificationReport verify_zero_temp_hurwitz(const WeightModel& model, int d,
                                                   const Partition& mu, const Partition& nu) {
    if (d < 1) throw DomainError("verify_zero_temp_hurwitz: d must be positive");
    const int n = mu.weight();
    if (n < 2 * d) throw DomainError("verify_zero_temp_hurwitz: requires n >= 2d");
    auto config_sum = [&](const Partition& shape) {
        Rational total = 0;
        for (const BranchingConfig& config : enumerate_configs(n, d, shape.length())) {
            if (!(lambda_map(config) == shape)) continue;
            std::vector<Partition> profiles = config.profiles;
            profiles.push_back(mu);
            profiles.push_back(nu);
            total += hurwitz(profiles);
        }
        return total;
    };
    ExpansionClaim c;
    c.source_ref = "zero-temp-hurwitz[" + model.tag() + ",d=" + std::to_string(d) + "," +
                   mu.str() + ";" + nu.str() + "]";
    c.var = Var::q;
    c.scale_power = 0;
    c.claimed[d] = config_sum(Partition({d}));
    if (d >= 2) c.claimed[d + 1] = config_sum(Partition({d - 1, 1}));
    c.validity = "n >= 2d";
    return compare_series(std::move(c),
                          weighted_hurwitz_series(d, model, Var::q, mu, nu, d + 2));
}

/// Dispatcher matching the CLI: pf variant without profiles, Hurwitz variant
/// with them.
inline VerificationReport verify_zero_temp(const WeightModel& model, int d,
                                           std::optional<Partition> mu = {},
                                           std::optional<Partition> nu = {}) {
    if (mu.has_value() != nu.has_value())
        throw DomainError("verify_zero_temp: mu and nu must be given together");
    if (mu) return verify_zero_temp_hurwitz(model, d, *mu, *nu);
    return verify_zero_temp_pf(model, d);
}

/// Principal part of Phi(1^d): eps^d * Phi = 1 - eps * d(d+1)/4 + O(eps^2).
inline VerificationReport verify_phi_principal(const WeightModel& model, int d) {
    if (d < 1) throw DomainError("verify_phi_principal: d must be positive");
    ExpansionClaim c;
    c.source_ref = "phi-principal[" + model.tag() + ",d=" + std::to_string(d) + "]";
    c.var = Var::eps;
    c.scale_power = d;
    c.claimed[0] = 1;
    c.claimed[1] = -Rational(d * (d + 1)) / 4;
    c.validity = "lambda = (1^d), q = e^{-eps}";
    const Partition lam(std::vector<int>(static_cast<std::size_t>(d), 1));
    return compare_series(std::move(c), phi_eps_series(model, lam, 2 - d).shifted(d));
}

/// Leading term of Phi(2, 1^{d-2}): eps^{d-1} * Phi = 1/2 + O(eps).
inline VerificationReport verify_phi_subprincipal(const WeightModel& model, int d) {
    if (d < 2) throw DomainError("verify_phi_subprincipal: requires d >= 2");
    ExpansionClaim c;
    c.source_ref = "phi-subprincipal[" + model.tag() + ",d=" + std::to_string(d) + "]";
    c.var = Var::eps;
    c.scale_power = d - 1;
    c.claimed[0] = Rational(1, 2);
    c.validity = "lambda = (2, 1^{d-2}), q = e^{-eps}";
    std::vector<int> parts{2};
    parts.insert(parts.end(), static_cast<std::size_t>(d - 2), 1);
    return compare_series(std::move(c), phi_eps_series(model, Partition(parts), 2 - d).shifted(d - 1));
}

/// Total-variation distances of the colength measure to a Dirac mass along a
/// sequence of q values, with a monotonicity flag.
struct ConvergenceReport {
    Partition target;
    std::vector<std::pair<Rational, Rational>> distances;  // (q, TV)
    bool decreasing = true;
};

inline ConvergenceReport dirac_convergence_check(int d, const WeightModel& model,
                                                 const std::vector<Rational>& q_values,
                                                 const Partition& target) {
    ConvergenceReport rep;
    rep.target = target;
    const auto delta = DiscreteMeasure<Partition>::dirac(target);
    for (const Rational& q : q_values) {
        check_q(q);
        rep.distances.emplace_back(q, total_variation(xi_measure(d, model, q), delta));
    }
    for (std::size_t i = 1; i < rep.distances.size(); ++i) {
        const Rational &prev = rep.distances[i - 1].second, &cur = rep.distances[i].second;
        // strictly decreasing, except that an exactly attained limit may stay at 0
        if (!(cur < prev || (prev == 0 && cur == 0))) rep.decreasing = false;
    }
    return rep;
}

/// A registered claim bundles the claim with a thunk producing its report.
struct RegisteredClaim {
    ExpansionClaim claim;
    std::function<VerificationReport()> run;
};

/// Representative instantiation of every tracked asymptotic claim family.
inline std::vector<RegisteredClaim> claim_registry() {
    std::vector<RegisteredClaim> reg;
    const std::vector<WeightModel> models = {WeightModel{WeightKind::EPrime},
                                             WeightModel{WeightKind::E},
                                             WeightModel{WeightKind::H}};
    for (const auto& model : models)
        for (int d = 1; d <= 4; ++d)
            reg.push_back({claim_pf_semiclassical(model, d),
                           [model, d] { return verify_pf_semiclassical(model, d); }});
    for (const auto& model : models)
        for (int d = 1; d <= 3; ++d)
            for (const Partition& lam : enumerate_partitions(d)) {
                auto rep = verify_weight_semiclassical(model, lam);
                reg.push_back({rep.claim, [model, lam] {
                                   return verify_weight_semiclassical(model, lam);
                               }});
            }
    const WeightModel eprime{WeightKind::EPrime};
    for (int d = 1; d <= 5; ++d)
        reg.push_back({verify_phi_principal(eprime, d).claim,
                       [eprime, d] { return verify_phi_principal(eprime, d); }});
    for (int d = 2; d <= 5; ++d)
        reg.push_back({verify_phi_subprincipal(eprime, d).claim,
                       [eprime, d] { return verify_phi_subprincipal(eprime, d); }});
    for (int d = 2; d <= 6; ++d)
        reg.push_back({verify_zero_temp_pf(eprime, d).claim,
                       [eprime, d] { return verify_zero_temp_pf(eprime, d); }});
    {
        const Partition mu({2, 1, 1});
        for (const auto& model : models)
            for (int d = 1; d <= 2; ++d)
                reg.push_back({verify_hurwitz_semiclassical(model, d, mu, mu).claim,
                               [model, d, mu] {
                                   return verify_hurwitz_semiclassical(model, d, mu, mu);
                               }});
        for (int d = 1; d <= 2; ++d)
            reg.push_back({verify_zero_temp_hurwitz(eprime, d, mu, mu).claim,
                           [eprime, d, mu] {
                               return verify_zero_temp_hurwitz(eprime, d, mu, mu);
                           }});
    }
    return reg;
}

}  // namespace qhw
