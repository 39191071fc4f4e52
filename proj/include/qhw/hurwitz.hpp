#pragma once

#include "qhw/characters.hpp"
#include "qhw/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <shared_mutex>
#include <vector>

namespace qhw {

inline void check_equal_weights(const std::vector<Partition>& profiles) {
    if (profiles.empty()) throw DomainError("hurwitz: empty profile list");
    for (const auto& p : profiles)
        if (p.weight() != profiles.front().weight())
            throw DomainError("hurwitz: profiles have unequal weights");
}

namespace detail {

inline Rational hurwitz_frobenius(const std::vector<Partition>& profiles) {
    const int n = profiles.front().weight();
    const int k = static_cast<int>(profiles.size());
    std::vector<Integer> zs;
    zs.reserve(profiles.size());
    for (const auto& p : profiles) zs.push_back(stats(p).z_order);
    Rational total = 0;
    for (const Partition& lam : enumerate_partitions(n)) {
        const Integer h = stats(lam).hook_product;
        Rational term = 1;
        if (k >= 2) {
            Integer hp = 1;
            for (int t = 0; t < k - 2; ++t) hp *= h;
            term = hp;
        } else {
            term = Rational(1, h);
        }
        for (std::size_t i = 0; i < profiles.size(); ++i) {
            const Integer chi = character(lam, profiles[i]);
            if (chi == 0) { term = 0; break; }
            term *= Rational(chi, zs[i]);
        }
        total += term;
    }
    return total;
}

struct HurwitzCache {
    std::map<std::vector<Partition>, Rational> memo;
    std::shared_mutex mutex;
};

inline HurwitzCache& hurwitz_cache() {
    static HurwitzCache cache;
    return cache;
}

}  // namespace detail

/// Pure double/multi Hurwitz number via the Frobenius-Schur character sum.
/// Symmetric in the profiles; memoized on the sorted profile multiset.
inline Rational hurwitz(const std::vector<Partition>& profiles) {
    check_equal_weights(profiles);
    std::vector<Partition> key = profiles;
    std::sort(key.begin(), key.end());
    auto& cache = detail::hurwitz_cache();
    {
        std::shared_lock lock(cache.mutex);
        if (auto it = cache.memo.find(key); it != cache.memo.end()) return it->second;
    }
    const Rational value = detail::hurwitz_frobenius(key);
    {
        std::unique_lock lock(cache.mutex);
        cache.memo.emplace(std::move(key), value);
    }
    return value;
}

namespace detail {

using Perm = std::vector<int>;

inline Partition cycle_type(const Perm& p) {
    const int n = static_cast<int>(p.size());
    std::vector<bool> seen(p.size(), false);
    std::vector<int> lens;
    for (int i = 0; i < n; ++i) {
        if (seen[static_cast<std::size_t>(i)]) continue;
        int len = 0, j = i;
        while (!seen[static_cast<std::size_t>(j)]) {
            seen[static_cast<std::size_t>(j)] = true;
            j = p[static_cast<std::size_t>(j)];
            ++len;
        }
        lens.push_back(len);
    }
    return Partition::sorted(std::move(lens));
}

inline std::map<Partition, std::vector<Perm>> conjugacy_classes(int n) {
    std::map<Partition, std::vector<Perm>> classes;
    Perm p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    do {
        classes[cycle_type(p)].push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return classes;
}

}  // namespace detail

/// Definitional oracle: counts ordered tuples of class elements multiplying
/// to the identity, divided by n!. Guarded to n <= 6.
inline Rational brute_force_hurwitz(const std::vector<Partition>& profiles) {
    check_equal_weights(profiles);
    const int n = profiles.front().weight();
    if (n > 6) throw DomainError("brute_force_hurwitz: n above guard (6)");
    if (n == 0) return 1;  // single empty factorization of the identity in S_0
    const auto classes = detail::conjugacy_classes(n);
    for (const auto& p : profiles)
        if (!classes.count(p)) throw DomainError("brute_force_hurwitz: bad profile");
    const std::size_t k = profiles.size();
    long long count = 0;
    detail::Perm acc(static_cast<std::size_t>(n));
    std::iota(acc.begin(), acc.end(), 0);
    // product over the first k-1 factors; the last is forced
    auto recurse = [&](auto&& self, std::size_t idx, const detail::Perm& prod) -> void {
        if (idx + 1 == k) {
            // need prod * h_k = id, i.e. h_k = prod^{-1}; same cycle type as prod
            if (detail::cycle_type(prod) == profiles[idx]) ++count;
            return;
        }
        for (const auto& h : classes.at(profiles[idx])) {
            detail::Perm next(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i)
                next[static_cast<std::size_t>(i)] = prod[static_cast<std::size_t>(h[static_cast<std::size_t>(i)])];
            self(self, idx + 1, next);
        }
    };
    if (k == 1) {
        count = (profiles[0].length() == n) ? 1 : 0;  // only the identity multiplies to identity
    } else {
        recurse(recurse, 0, acc);
    }
    return Rational(count, factorial(n));
}

/// Classical simple double Hurwitz number: d transpositions plus (mu, nu).
inline Rational simple_hurwitz(int d, const Partition& mu, const Partition& nu) {
    if (d < 0) throw DomainError("simple_hurwitz: negative d");
    if (mu.weight() != nu.weight()) throw DomainError("simple_hurwitz: weight mismatch");
    const int n = mu.weight();
    if (d >= 1 && n < 2) return 0;  // no transposition class exists below n = 2
    std::vector<Partition> profiles;
    if (d >= 1) profiles.assign(static_cast<std::size_t>(d), special_partition(2, 1, n));
    profiles.push_back(mu);
    profiles.push_back(nu);
    return hurwitz(profiles);
}

/// Riemann-Hurwitz: chi = l(mu) + l(nu) - d.
inline int euler_characteristic(const Partition& mu, const Partition& nu, int d) {
    if (mu.weight() != nu.weight()) throw DomainError("euler_characteristic: weight mismatch");
    return mu.length() + nu.length() - d;
}

}  // namespace qhw
