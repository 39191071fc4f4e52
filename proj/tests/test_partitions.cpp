#include <qhw/partition.hpp>

#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

using namespace qhw;

namespace {

// Independent enumerator: choose a multiplicity for each part size 1..n.
std::set<std::vector<int>> oracle_partitions(int n) {
    std::set<std::vector<int>> out;
    std::vector<int> mults;
    // choose multiplicity of part sizes 1..n in order
    std::function<void(int, int)> rec = [&](int part, int remaining) {
        if (part > n) {
            if (remaining == 0) {
                std::vector<int> parts;
                for (int p = n; p >= 1; --p)
                    parts.insert(parts.end(),
                                 static_cast<std::size_t>(mults[static_cast<std::size_t>(p - 1)]), p);
                out.insert(parts);
            }
            return;
        }
        for (int m = 0; m * part <= remaining; ++m) {
            mults.push_back(m);
            rec(part + 1, remaining - m * part);
            mults.pop_back();
        }
    };
    rec(1, n);
    return out;
}

}  // namespace

TEST_CASE("enumeration matches the multiplicity-vector oracle") {
    for (int n = 1; n <= 9; ++n) {
        const auto oracle = oracle_partitions(n);
        const auto got = enumerate_partitions(n);
        REQUIRE(got.size() == oracle.size());
        std::set<std::vector<int>> seen;
        for (const Partition& p : got) {
            CHECK(p.weight() == n);
            seen.insert(p.parts());
        }
        CHECK(seen == oracle);
        CHECK(partition_count(n) == static_cast<long long>(oracle.size()));
    }
}

TEST_CASE("enumeration order is weight-then-reverse-lexicographic") {
    const auto got = enumerate_partitions(4);
    std::vector<std::string> names;
    for (const Partition& p : got) names.push_back(p.str());
    CHECK(names == std::vector<std::string>{"4", "3,1", "2,2", "2,1,1", "1,1,1,1"});
    for (std::size_t i = 1; i < got.size(); ++i) CHECK(got[i - 1] < got[i]);
}

TEST_CASE("fixed-length enumeration and counts") {
    for (int n = 1; n <= 8; ++n)
        for (int len = 1; len <= n; ++len) {
            const auto sub = enumerate_partitions(n, len);
            long long count = 0;
            for (const Partition& p : enumerate_partitions(n))
                if (p.length() == len) ++count;
            CHECK(static_cast<long long>(sub.size()) == count);
            CHECK(partition_count(n, len) == count);
        }
}

TEST_CASE("z-order identity: sum over classes of 1/z is 1") {
    for (int n = 1; n <= 8; ++n) {
        Rational total = 0;
        for (const Partition& mu : enumerate_partitions(n)) total += Rational(1, stats(mu).z_order);
        CHECK(total == 1);
    }
}

TEST_CASE("aut order counts repeated parts") {
    for (int n = 1; n <= 7; ++n)
        for (const Partition& lam : enumerate_partitions(n)) {
            // number of distinct arrangements of the parts = l! / |aut|
            std::vector<int> parts = lam.parts();
            std::sort(parts.begin(), parts.end());
            long long arrangements = 0;
            do {
                ++arrangements;
            } while (std::next_permutation(parts.begin(), parts.end()));
            CHECK(Integer(arrangements) * stats(lam).aut_order == factorial(lam.length()));
        }
}

TEST_CASE("partition statistics on known shapes") {
    const Partition lam({3, 1});
    const auto st = stats(lam);
    CHECK(st.z_order == 3);
    CHECK(st.aut_order == 1);
    CHECK(st.colength == 2);
    CHECK(st.hook_product == 8);  // hooks 4,2,1 and 1
    CHECK(st.contents == std::vector<int>{0, 1, 2, -1});
    CHECK(lam.conjugate() == Partition({2, 1, 1}));
    CHECK(lam.conjugate().conjugate() == lam);
}

TEST_CASE("special partitions and parsing") {
    CHECK(special_partition(2, 1, 4) == Partition({2, 1, 1}));
    CHECK(special_partition(2, 2, 5) == Partition({2, 2, 1}));
    CHECK(special_partition(3, 1, 3) == Partition({3}));
    CHECK(Partition::parse("3,1,1") == Partition({3, 1, 1}));
    CHECK(Partition::parse("").empty());
    CHECK_THROWS_AS(Partition({0}), DomainError);
    CHECK_THROWS_AS(Partition({1, 2}), DomainError);
    CHECK_THROWS_AS(Partition::parse("2,x"), DomainError);
}
