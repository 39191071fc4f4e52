#pragma once

#include "qhw/partition.hpp"
#include "qhw/weights.hpp"

#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace qhw {

/// Element of M_{d,k}^{(n)} in canonical form: profiles of weight n with
/// positive colength, colengths weakly decreasing. Within a block of equal
/// colength the entries are independently chosen (ordered), which is what
/// makes the preimage count of the colength map factor as prod_j p(lambda_j).
struct BranchingConfig {
    std::vector<Partition> profiles;

    static BranchingConfig make(std::vector<Partition> profiles) {
        for (std::size_t i = 0; i < profiles.size(); ++i) {
            if (profiles[i].colength() < 1)
                throw DomainError("BranchingConfig: identity profile not allowed");
            if (i > 0 && profiles[i].colength() > profiles[i - 1].colength())
                throw DomainError("BranchingConfig: colengths must be weakly decreasing");
            if (profiles[i].weight() != profiles[0].weight())
                throw DomainError("BranchingConfig: profiles must share a weight");
        }
        return BranchingConfig{std::move(profiles)};
    }

    int total_colength() const {
        int d = 0;
        for (const auto& p : profiles) d += p.colength();
        return d;
    }

    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < profiles.size(); ++i) {
            if (i > 0) s += ';';
            s += profiles[i].str();
        }
        return s;
    }

    bool operator==(const BranchingConfig& o) const { return profiles == o.profiles; }
    bool operator<(const BranchingConfig& o) const { return profiles < o.profiles; }
};

/// Colength partition of a configuration.
inline Partition lambda_map(const BranchingConfig& config) {
    std::vector<int> cols;
    cols.reserve(config.profiles.size());
    for (const auto& p : config.profiles) cols.push_back(p.colength());
    return Partition(std::move(cols));  // already weakly decreasing
}

/// All canonical configurations of total colength d (exactly k profiles when
/// given), grouped by colength partition in reverse-lexicographic order.
inline std::vector<BranchingConfig> enumerate_configs(int n, int d, std::optional<int> k = {}) {
    if (n < 1) throw DomainError("enumerate_configs: n must be positive");
    if (d < 0) throw DomainError("enumerate_configs: negative d");
    std::vector<BranchingConfig> out;
    if (d == 0) return out;
    // profile options per colength
    std::vector<std::vector<Partition>> by_colength(static_cast<std::size_t>(d) + 1);
    for (const Partition& p : enumerate_partitions(n))
        if (p.colength() >= 1 && p.colength() <= d)
            by_colength[static_cast<std::size_t>(p.colength())].push_back(p);
    for (const Partition& lam : enumerate_partitions(d)) {
        if (k && lam.length() != *k) continue;
        bool feasible = true;
        for (int part : lam.parts())
            if (by_colength[static_cast<std::size_t>(part)].empty()) { feasible = false; break; }
        if (!feasible) continue;
        std::vector<Partition> acc;
        auto rec = [&](auto&& self, int pos) -> void {
            if (pos == lam.length()) {
                out.push_back(BranchingConfig{acc});
                return;
            }
            for (const Partition& p : by_colength[static_cast<std::size_t>(lam.part(pos))]) {
                acc.push_back(p);
                self(self, pos + 1);
                acc.pop_back();
            }
        };
        rec(rec, 0);
    }
    return out;
}

/// Number of canonical configurations with colength partition lambda. For
/// n >= 2d a weight-n profile of colength c is a partition of c with an extra
/// row of fixed parts glued on, so each block contributes p(lambda_j).
inline long long preimage_count(const Partition& lam, int n) {
    if (n < 2 * lam.weight()) throw DomainError("preimage_count: requires n >= 2d");
    long long total = 1;
    for (int part : lam.parts()) total *= partition_count(part);
    return total;
}

/// Partition function Z = sum over P_d of p(lambda) w(lambda); when n is
/// given the sum is recomputed over the configuration space and the two are
/// asserted equal.
inline Rational partition_function(int d, const WeightModel& model, std::optional<Rational> q,
                                   std::optional<int> n = {}) {
    if (d < 1) throw DomainError("partition_function: d must be positive");
    Rational z = 0;
    for (const Partition& lam : enumerate_partitions(d)) {
        Rational plam = 1;
        for (int part : lam.parts()) plam *= partition_count(part);
        z += plam * weight_on_Pd(model, lam, q);
    }
    if (n) {
        if (*n < 2 * d) throw DomainError("partition_function: requires n >= 2d");
        Rational zn = 0;
        for (const BranchingConfig& config : enumerate_configs(*n, d))
            zn += weight_on_Pd(model, lambda_map(config), q);
        if (zn != z)
            throw DomainError("partition_function: n-dependent sum disagrees with the n-free value");
    }
    return z;
}

/// Finitely supported signed measure with its normalizer. Support is kept in
/// canonical enumeration order.
template <typename Elem>
struct DiscreteMeasure {
    std::vector<std::pair<Elem, Rational>> support;
    Rational normalizer;

    Rational mass_of(const Elem& e) const {
        for (const auto& [elem, mass] : support)
            if (elem == e) return mass;
        return 0;
    }

    Rational total_mass() const {
        Rational t = 0;
        for (const auto& [elem, mass] : support) t += mass;
        return t;
    }

    Rational total_variation_mass() const {
        Rational t = 0;
        for (const auto& [elem, mass] : support) t += mass < 0 ? -mass : mass;
        return t;
    }

    static DiscreteMeasure dirac(Elem e) {
        return DiscreteMeasure{{{std::move(e), Rational(1)}}, Rational(1)};
    }
};

/// Pushforward measure xi on P_d: xi(lambda) = p(lambda) w(lambda) / Z.
inline DiscreteMeasure<Partition> xi_measure(int d, const WeightModel& model,
                                             std::optional<Rational> q) {
    const Rational z = partition_function(d, model, q);
    if (z == 0) throw DomainError("xi_measure: zero normalizer");
    DiscreteMeasure<Partition> m;
    m.normalizer = z;
    for (const Partition& lam : enumerate_partitions(d)) {
        Rational plam = 1;
        for (int part : lam.parts()) plam *= partition_count(part);
        m.support.emplace_back(lam, plam * weight_on_Pd(model, lam, q) / z);
    }
    return m;
}

/// Configuration measure Theta on M_d^(n): Theta(config) = w(Lambda(config)) / Z.
inline DiscreteMeasure<BranchingConfig> theta_measure(int n, int d, const WeightModel& model,
                                                      std::optional<Rational> q) {
    if (n < 2 * d) throw DomainError("theta_measure: requires n >= 2d");
    const Rational z = partition_function(d, model, q, n);
    if (z == 0) throw DomainError("theta_measure: zero normalizer");
    DiscreteMeasure<BranchingConfig> m;
    m.normalizer = z;
    for (const BranchingConfig& config : enumerate_configs(n, d))
        m.support.emplace_back(config, weight_on_Pd(model, lambda_map(config), q) / z);
    return m;
}

/// Pushforward of a configuration measure under the colength map.
inline DiscreteMeasure<Partition> pushforward(const DiscreteMeasure<BranchingConfig>& theta, int d) {
    DiscreteMeasure<Partition> out;
    out.normalizer = theta.normalizer;
    for (const Partition& lam : enumerate_partitions(d)) {
        Rational mass = 0;
        for (const auto& [config, m] : theta.support)
            if (lambda_map(config) == lam) mass += m;
        out.support.emplace_back(lam, mass);
    }
    return out;
}

template <typename Elem>
Rational expectation(const DiscreteMeasure<Elem>& m, const std::function<Rational(const Elem&)>& g) {
    Rational total = 0;
    for (const auto& [elem, mass] : m.support) total += mass * g(elem);
    return total;
}

/// Total variation distance (1/2) sum |m1 - m2| over the union of supports.
template <typename Elem>
Rational total_variation(const DiscreteMeasure<Elem>& m1, const DiscreteMeasure<Elem>& m2) {
    std::map<Elem, Rational> diff;
    for (const auto& [elem, mass] : m1.support) diff[elem] += mass;
    for (const auto& [elem, mass] : m2.support) diff[elem] -= mass;
    Rational total = 0;
    for (const auto& [elem, delta] : diff) total += delta < 0 ? -delta : delta;
    return total / 2;
}

}  // namespace qhw
