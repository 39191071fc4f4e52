#pragma once

#include "qhw/characters.hpp"
#include "qhw/parallel.hpp"
#include "qhw/verify.hpp"
#include "qhw/weighted.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace qhw {

/// beta-expansion of the content product r_lambda = prod over cells of
/// G(beta * content); constant term is 1 for every supported model.
struct ContentProductSeries {
    Partition lam;
    WeightModel model;
    std::optional<Rational> q;
    LaurentSeries series;  // in beta
};

/// z^t coefficient of G(z) for any model (q required for quantum models).
inline Rational model_series_coeff(const WeightModel& model, int t, std::optional<Rational> q) {
    if (t < 0) throw DomainError("model_series_coeff: negative index");
    switch (model.kind) {
        case WeightKind::EPrime:
        case WeightKind::E:
        case WeightKind::H:
            if (!q) throw DomainError("model_series_coeff: quantum model needs q");
            return gen_function_coeff(model, t, *q);
        case WeightKind::Exp:
            return Rational(1, factorial(t));
        case WeightKind::Belyi:
            return t <= 1 ? 1 : 0;
        case WeightKind::FiniteC: {
            // elementary symmetric polynomial e_t(c)
            if (t > static_cast<int>(model.c.size())) return 0;
            std::vector<Rational> e(static_cast<std::size_t>(t) + 1);
            e[0] = 1;
            for (const Rational& ci : model.c)
                for (int j = t; j >= 1; --j)
                    e[static_cast<std::size_t>(j)] += ci * e[static_cast<std::size_t>(j - 1)];
            return e[static_cast<std::size_t>(t)];
        }
    }
    throw DomainError("model_series_coeff: unreachable");
}

inline ContentProductSeries content_product(const Partition& lam, const WeightModel& model,
                                            std::optional<Rational> q, long beta_order) {
    if (beta_order < 1) throw DomainError("content_product: betaOrder must be >= 1");
    const long valid = beta_order + 1;  // exact through beta^beta_order
    LaurentSeries r = LaurentSeries::constant(Var::beta, 1, valid);
    for (int i = 1; i <= lam.length(); ++i) {
        for (int j = 1; j <= lam.part(i - 1); ++j) {
            const long content = j - i;
            if (content == 0) continue;  // G(0) = 1
            std::vector<Rational> cs;
            Rational cpow = 1;
            for (long t = 0; t < valid; ++t) {
                cs.push_back(model_series_coeff(model, static_cast<int>(t), q) * cpow);
                cpow *= content;
            }
            r = (r * LaurentSeries(Var::beta, 0, std::move(cs), valid)).truncated(valid);
        }
    }
    return {lam, model, q, r};
}

/// The degree-n slice of the hypergeometric tau function: for each pair of
/// weight-n partitions (mu, nu), the rationals t_d with
/// tau = sum_lambda r_lambda * (chi/z)(lambda, mu) * (chi/z)(lambda, nu)
/// collected per beta-degree d <= d_max.
struct TauSlice {
    int n = 0;
    int d_max = 0;
    std::map<std::pair<Partition, Partition>, std::vector<Rational>> coefficients;

    const std::vector<Rational>& at(const Partition& mu, const Partition& nu) const {
        auto it = coefficients.find({mu, nu});
        if (it == coefficients.end()) throw DomainError("TauSlice: pair not present");
        return it->second;
    }
};

inline TauSlice tau_coefficients(const WeightModel& model, std::optional<Rational> q, int n,
                                 int d_max) {
    if (n < 1) throw DomainError("tau_coefficients: n must be positive");
    if (d_max < 0) throw DomainError("tau_coefficients: negative dMax");
    const std::vector<Partition> lams = enumerate_partitions(n);
    using Table = std::map<std::pair<Partition, Partition>, std::vector<Rational>>;
    std::vector<Table> slots(lams.size());
    parallel_for(lams.size(), [&](std::size_t idx) {
        const Partition& lam = lams[idx];
        const LaurentSeries r = content_product(lam, model, q, d_max + 1).series;
        const auto chi = schur_in_powersums(lam);
        Table& slot = slots[idx];
        for (const auto& [mu, a] : chi)
            for (const auto& [nu, b] : chi) {
                auto& row = slot[{mu, nu}];
                row.assign(static_cast<std::size_t>(d_max) + 1, 0);
                for (int d = 0; d <= d_max; ++d) row[static_cast<std::size_t>(d)] = r.coeff(d) * a * b;
            }
    });
    TauSlice out;
    out.n = n;
    out.d_max = d_max;
    for (const Table& slot : slots)
        for (const auto& [pair, row] : slot) {
            auto& acc = out.coefficients[pair];
            if (acc.empty()) acc.assign(row.size(), 0);
            for (std::size_t d = 0; d < row.size(); ++d) acc[d] += row[d];
        }
    return out;
}

/// Coefficient identity between the Schur-side tau expansion and the
/// configuration-side weighted Hurwitz numbers (with the 1/d! convention for
/// the exponential model). One status row per (mu, nu, d).
inline VerificationReport verify_tau_identity(const WeightModel& model, std::optional<Rational> q,
                                          int n, int d_max) {
    const TauSlice slice = tau_coefficients(model, q, n, d_max);
    VerificationReport rep;
    rep.claim.source_ref = "tau-identity[" + model.tag() + ",n=" + std::to_string(n) + "]";
    rep.claim.var = Var::beta;
    rep.claim.scale_power = 0;
    rep.claim.validity = "";
    for (const auto& [pair, row] : slice.coefficients) {
        const auto& [mu, nu] = pair;
        for (int d = 0; d <= d_max; ++d) {
            const Rational want = model.kind == WeightKind::Exp
                                      ? simple_hurwitz(d, mu, nu) / factorial(d)
                                      : weighted_hurwitz(d, model, q, mu, nu);
            rep.add(mu.str() + ";" + nu.str(), d, want, row[static_cast<std::size_t>(d)]);
        }
    }
    rep.notes = "tau coefficients vs weighted Hurwitz numbers";
    return rep;
}

/// Order-0 coefficient of eps^d times each weighted-Hurwitz eps-series
/// against simple Hurwitz numbers divided by d!.
inline VerificationReport classical_limit_check(const WeightModel& model, int n, int d_max) {
    if (!model.quantum()) throw DomainError("classical_limit_check: quantum models only");
    VerificationReport rep;
    rep.claim.source_ref = "classical-limit[" + model.tag() + ",n=" + std::to_string(n) + "]";
    rep.claim.var = Var::eps;
    rep.claim.scale_power = 0;
    rep.claim.validity = "order-0 coefficients at q = e^{-eps}";
    for (const Partition& mu : enumerate_partitions(n))
        for (const Partition& nu : enumerate_partitions(n))
            for (int d = 0; d <= d_max; ++d) {
                const LaurentSeries s =
                    weighted_hurwitz_series(d, model, Var::eps, mu, nu, std::max(1 - d, 2)).shifted(d);
                rep.add(mu.str() + ";" + nu.str(), d, simple_hurwitz(d, mu, nu) / factorial(d),
                        s.coeff(0));
            }
    rep.notes = "leading eps coefficients vs simple branching";
    return rep;
}

/// Lowest q-order of the weighted Hurwitz q-series: coefficients vanish below
/// q^d and the q^d coefficient equals the Belyi-model value (the sum of pure
/// Hurwitz numbers over single colength-d profiles).
inline VerificationReport zero_temp_tau_check(int n, int d_max) {
    if (n < 2 * d_max) throw DomainError("zero_temp_tau_check: requires n >= 2*dMax");
    const WeightModel eprime{WeightKind::EPrime, {}};
    const WeightModel belyi{WeightKind::Belyi, {}};
    VerificationReport rep;
    rep.claim.source_ref = "zero-temp-tau[n=" + std::to_string(n) + "]";
    rep.claim.var = Var::q;
    rep.claim.scale_power = 0;
    rep.claim.validity = "n >= 2*dMax";
    for (const Partition& mu : enumerate_partitions(n))
        for (const Partition& nu : enumerate_partitions(n))
            for (int d = 1; d <= d_max; ++d) {
                const LaurentSeries s =
                    weighted_hurwitz_series(d, eprime, Var::q, mu, nu, d + 1);
                const std::string label = mu.str() + ";" + nu.str() + ",d=" + std::to_string(d);
                for (int j = 1; j < d; ++j) rep.add(label, j, 0, s.coeff(j));
                rep.add(label, d, weighted_hurwitz(d, belyi, {}, mu, nu), s.coeff(d));
            }
    rep.notes = "lowest q-order vs single-branch-point model";
    return rep;
}

}  // namespace qhw
