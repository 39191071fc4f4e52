#pragma once

// Independent symmetric-group character oracle via the bialternant formula:
// chi^lambda(mu) = [x^{lambda+delta}] a_delta * p_mu in n variables, with
// a_delta = sum over permutations sigma of sgn(sigma) x^{sigma(delta)}.

#include <qhw/partition.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

namespace qhw_test {

using Mono = std::vector<int>;

inline std::map<Mono, qhw::Integer> power_sum_product(const qhw::Partition& mu, int vars) {
    std::map<Mono, qhw::Integer> prod{{Mono(static_cast<std::size_t>(vars), 0), 1}};
    for (int r : mu.parts()) {
        std::map<Mono, qhw::Integer> next;
        for (const auto& [mono, coeff] : prod)
            for (int i = 0; i < vars; ++i) {
                Mono m = mono;
                m[static_cast<std::size_t>(i)] += r;
                next[m] += coeff;
            }
        prod = std::move(next);
    }
    return prod;
}

inline qhw::Integer character_oracle(const qhw::Partition& lam, const qhw::Partition& mu) {
    const int n = lam.weight();
    const auto prod = power_sum_product(mu, n);
    std::vector<int> delta(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) delta[static_cast<std::size_t>(i)] = n - 1 - i;
    Mono target(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < lam.length(); ++i) target[static_cast<std::size_t>(i)] = lam.part(i);
    for (int i = 0; i < n; ++i) target[static_cast<std::size_t>(i)] += delta[static_cast<std::size_t>(i)];

    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    qhw::Integer total = 0;
    do {
        // sign of perm by counting inversions
        int inv = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) ++inv;
        Mono want(static_cast<std::size_t>(n));
        bool feasible = true;
        for (int i = 0; i < n; ++i) {
            const int e = target[static_cast<std::size_t>(i)] -
                          delta[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
            if (e < 0) { feasible = false; break; }
            want[static_cast<std::size_t>(i)] = e;
        }
        if (!feasible) continue;
        auto it = prod.find(want);
        if (it == prod.end()) continue;
        total += (inv % 2 == 0) ? it->second : -it->second;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

}  // namespace qhw_test
