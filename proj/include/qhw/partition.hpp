#pragma once

#include "qhw/rational.hpp"

#include <algorithm>
#include <compare>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace qhw {

/// Integer partition: weakly decreasing positive parts. The empty partition
/// (weight 0) is valid. Value type, immutable after construction.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1) throw DomainError("Partition: parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw DomainError("Partition: parts must be weakly decreasing");
            weight_ += parts_[i];
        }
    }

    static Partition sorted(std::vector<int> parts) {
        std::sort(parts.begin(), parts.end(), std::greater<int>());
        return Partition(std::move(parts));
    }

    /// Parses "3,1,1"; the empty string is the empty partition.
    static Partition parse(std::string_view text) {
        std::vector<int> parts;
        if (!text.empty()) {
            std::stringstream ss{std::string(text)};
            std::string tok;
            while (std::getline(ss, tok, ',')) {
                try {
                    parts.push_back(std::stoi(tok));
                } catch (const std::exception&) {
                    throw DomainError("Partition::parse: bad part '" + tok + "'");
                }
            }
        }
        return Partition(std::move(parts));
    }

    const std::vector<int>& parts() const { return parts_; }
    int weight() const { return weight_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int colength() const { return weight_ - length(); }
    bool empty() const { return parts_.empty(); }
    int part(int i) const { return parts_.at(static_cast<std::size_t>(i)); }

    Partition conjugate() const {
        std::vector<int> conj;
        if (!parts_.empty()) {
            conj.assign(static_cast<std::size_t>(parts_[0]), 0);
            for (int p : parts_)
                for (int j = 0; j < p; ++j) ++conj[static_cast<std::size_t>(j)];
        }
        return Partition(std::move(conj));
    }

    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i > 0) s += ',';
            s += std::to_string(parts_[i]);
        }
        return s;
    }

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }

    /// Canonical order: by weight, then reverse-lexicographic ((4) < (3,1) < (2,2)).
    bool operator<(const Partition& o) const {
        if (weight_ != o.weight_) return weight_ < o.weight_;
        return std::lexicographical_compare(o.parts_.begin(), o.parts_.end(),
                                            parts_.begin(), parts_.end());
    }

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

struct PartitionStatistics {
    Integer z_order;         // z_lambda = prod m_i! i^{m_i}
    Integer aut_order;       // |aut(lambda)| = prod m_i!
    int colength = 0;
    Integer hook_product;
    std::vector<int> contents;      // j - i over cells, row-major
    std::map<int, int> multiplicities;
};

inline PartitionStatistics stats(const Partition& lam) {
    PartitionStatistics st;
    st.colength = lam.colength();
    for (int p : lam.parts()) ++st.multiplicities[p];
    st.z_order = 1;
    st.aut_order = 1;
    for (const auto& [part, mult] : st.multiplicities) {
        const Integer mf = factorial(mult);
        st.aut_order *= mf;
        st.z_order *= mf;
        for (int t = 0; t < mult; ++t) st.z_order *= part;
    }
    const Partition conj = lam.conjugate();
    st.hook_product = 1;
    for (int i = 0; i < lam.length(); ++i) {
        const int row = lam.part(i);
        for (int j = 0; j < row; ++j) {
            st.contents.push_back(j - i);
            const int arm = row - j - 1;
            const int leg = conj.part(j) - i - 1;
            st.hook_product *= arm + leg + 1;
        }
    }
    return st;
}

namespace detail {
inline void enum_parts(int n, int max_part, std::vector<int>& acc,
                       const std::optional<int>& length, std::vector<Partition>& out) {
    if (n == 0) {
        if (!length || static_cast<int>(acc.size()) == *length) out.push_back(Partition(acc));
        return;
    }
    if (length && static_cast<int>(acc.size()) >= *length) return;
    for (int p = std::min(n, max_part); p >= 1; --p) {
        acc.push_back(p);
        enum_parts(n - p, p, acc, length, out);
        acc.pop_back();
    }
}
}  // namespace detail

/// All partitions of n in reverse-lexicographic order, optionally restricted to
/// exactly `length` parts.
inline std::vector<Partition> enumerate_partitions(int n, std::optional<int> length = {}) {
    if (n < 0) throw DomainError("enumerate_partitions: negative n");
    std::vector<Partition> out;
    std::vector<int> acc;
    detail::enum_parts(n, n, acc, length, out);
    return out;
}

/// p(n), or p(n, k) = number of partitions of n into exactly k parts.
inline long long partition_count(int n, std::optional<int> length = {}) {
    if (n < 0) throw DomainError("partition_count: negative n");
    // p(n,k) = p(n-1,k-1) + p(n-k,k)
    std::vector<std::vector<long long>> p(static_cast<std::size_t>(n) + 1,
                                          std::vector<long long>(static_cast<std::size_t>(n) + 1, 0));
    p[0][0] = 1;
    // p(m,k) = p(m-1,k-1) [some part equals 1] + p(m-k,k) [all parts >= 2]
    for (int m = 1; m <= n; ++m)
        for (int k = 1; k <= m; ++k)
            p[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)] =
                p[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(k - 1)] +
                p[static_cast<std::size_t>(m - k)][static_cast<std::size_t>(k)];
    if (length) {
        if (*length > n || *length < 0) return n == 0 && *length == 0 ? 1 : 0;
        return p[static_cast<std::size_t>(n)][static_cast<std::size_t>(*length)];
    }
    long long total = 0;
    for (int k = 0; k <= n; ++k) total += p[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
    return total;
}

/// The partition (ell^m, 1^{n - ell*m}) of n.
inline Partition special_partition(int ell, int m, int n) {
    if (ell < 2) throw DomainError("special_partition: ell must be >= 2");
    if (m < 0) throw DomainError("special_partition: m must be >= 0");
    if (n < ell * m) throw DomainError("special_partition: n < ell*m");
    std::vector<int> parts(static_cast<std::size_t>(m), ell);
    parts.insert(parts.end(), static_cast<std::size_t>(n - ell * m), 1);
    return Partition(std::move(parts));
}

}  // namespace qhw
