#pragma once

#include "qhw/partition.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <utility>
#include <vector>

namespace qhw {

/// Irreducible characters of the symmetric group, computed by the
/// Murnaghan-Nakayama recursion over beta-sets. Values are memoized on
/// (remaining shape, remaining cycle list); the cache supports concurrent
/// lookups and idempotent concurrent inserts.
class CharacterTable {
public:
    Integer character(const Partition& lam, const Partition& mu) const {
        if (lam.weight() != mu.weight())
            throw DomainError("character: weight mismatch between lambda and mu");
        return recurse(lam.parts(), mu.parts());
    }

    /// The Frobenius expansion s_lambda = sum_mu z_mu^{-1} chi_lambda(mu) p_mu.
    std::map<Partition, Rational> schur_in_powersums(const Partition& lam) const {
        std::map<Partition, Rational> out;
        for (const Partition& mu : enumerate_partitions(lam.weight()))
            out.emplace(mu, Rational(character(lam, mu), stats(mu).z_order));
        return out;
    }

private:
    using Key = std::pair<std::vector<int>, std::vector<int>>;

    Integer recurse(const std::vector<int>& shape, const std::vector<int>& cycles) const {
        if (cycles.empty()) return 1;  // shape is empty too whenever weights matched
        {
            std::shared_lock lock(mutex_);
            if (auto it = memo_.find(Key{shape, cycles}); it != memo_.end()) return it->second;
        }
        const int r = cycles.front();
        const std::vector<int> rest(cycles.begin() + 1, cycles.end());
        // beta-set: strictly decreasing shifted parts
        const long len = static_cast<long>(shape.size());
        std::vector<long> beta(shape.size());
        for (long j = 0; j < len; ++j) beta[static_cast<std::size_t>(j)] = shape[static_cast<std::size_t>(j)] + (len - 1 - j);
        Integer total = 0;
        for (long j = 0; j < len; ++j) {
            const long bj = beta[static_cast<std::size_t>(j)];
            const long target = bj - r;
            if (target < 0) continue;
            bool occupied = false;
            int jumped = 0;
            for (long t = 0; t < len; ++t) {
                if (t == j) continue;
                const long bt = beta[static_cast<std::size_t>(t)];
                if (bt == target) { occupied = true; break; }
                if (bt > target && bt < bj) ++jumped;
            }
            if (occupied) continue;
            std::vector<long> nb = beta;
            nb[static_cast<std::size_t>(j)] = target;
            std::sort(nb.begin(), nb.end(), std::greater<long>());
            std::vector<int> next;
            for (long t = 0; t < len; ++t) {
                const long part = nb[static_cast<std::size_t>(t)] - (len - 1 - t);
                if (part > 0) next.push_back(static_cast<int>(part));
            }
            const Integer sub = recurse(next, rest);
            total += (jumped % 2 == 0) ? sub : -sub;
        }
        {
            std::unique_lock lock(mutex_);
            memo_.emplace(Key{shape, cycles}, total);
        }
        return total;
    }

    mutable std::map<Key, Integer> memo_;
    mutable std::shared_mutex mutex_;
};

/// Shared process-wide table (pure values; duplicate computation under
/// contention is harmless).
inline const CharacterTable& character_table() {
    static CharacterTable table;
    return table;
}

inline Integer character(const Partition& lam, const Partition& mu) {
    return character_table().character(lam, mu);
}

inline std::map<Partition, Rational> schur_in_powersums(const Partition& lam) {
    return character_table().schur_in_powersums(lam);
}

}  // namespace qhw
