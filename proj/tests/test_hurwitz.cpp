#include <qhw/hurwitz.hpp>

#include <doctest.h>

#include <functional>
#include <vector>

using namespace qhw;

namespace {

// All multisets of k partitions of n (weakly increasing index sequences).
void for_each_profile_multiset(int n, int k,
                               const std::function<void(const std::vector<Partition>&)>& fn) {
    const auto parts = enumerate_partitions(n);
    std::vector<Partition> acc;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
        if (static_cast<int>(acc.size()) == k) {
            fn(acc);
            return;
        }
        for (std::size_t i = from; i < parts.size(); ++i) {
            acc.push_back(parts[i]);
            rec(i);
            acc.pop_back();
        }
    };
    rec(0);
}

}  // namespace

TEST_CASE("character formula equals brute-force factorization counting (n <= 4)") {
    for (int n = 2; n <= 4; ++n)
        for (int k = 1; k <= 3; ++k)
            for_each_profile_multiset(n, k, [](const std::vector<Partition>& profiles) {
                CHECK(hurwitz(profiles) == brute_force_hurwitz(profiles));
            });
}

TEST_CASE("known values") {
    CHECK(hurwitz({Partition({3}), Partition({3})}) == Rational(1, 3));
    CHECK(hurwitz({Partition({2}), Partition({2})}) == Rational(1, 2));
    CHECK(hurwitz({Partition({2}), Partition({2}), Partition({2}), Partition({2})}) ==
          Rational(1, 2));
    CHECK(hurwitz({Partition({2}), Partition({2}), Partition({1, 1})}) == Rational(1, 2));
}

TEST_CASE("delta formula for two profiles") {
    for (int n = 1; n <= 5; ++n)
        for (const Partition& mu : enumerate_partitions(n))
            for (const Partition& nu : enumerate_partitions(n))
                CHECK(hurwitz({mu, nu}) ==
                      (mu == nu ? Rational(1, stats(mu).z_order) : Rational(0)));
}

TEST_CASE("profile-order symmetry and identity-profile invariance") {
    const Partition a({2, 1}), b({3}), c({2, 1}), id({1, 1, 1});
    CHECK(hurwitz({a, b, c}) == hurwitz({c, b, a}));
    CHECK(hurwitz({b, a, c}) == hurwitz({a, c, b}));
    for (int n = 2; n <= 4; ++n)
        for_each_profile_multiset(n, 2, [n](const std::vector<Partition>& profiles) {
            std::vector<Partition> extended = profiles;
            extended.push_back(Partition(std::vector<int>(static_cast<std::size_t>(n), 1)));
            CHECK(hurwitz(extended) == hurwitz(profiles));
        });
}

TEST_CASE("parity vanishing") {
    // the count is zero unless the total colength is even (genus formula)
    for (int n = 2; n <= 5; ++n)
        for_each_profile_multiset(n, 3, [](const std::vector<Partition>& profiles) {
            int total = 0;
            for (const Partition& p : profiles) total += p.colength();
            if (total % 2 != 0) CHECK(hurwitz(profiles) == 0);
        });
}

TEST_CASE("simple Hurwitz numbers") {
    // d transpositions: H(2, 2; (2), (2)) through small d
    const Partition two({2});
    CHECK(simple_hurwitz(0, two, two) == Rational(1, 2));
    CHECK(simple_hurwitz(1, two, two) == 0);
    CHECK(simple_hurwitz(2, two, two) == Rational(1, 2));
    const Partition three({3}), ones({1, 1, 1});
    CHECK(simple_hurwitz(2, ones, ones) == brute_force_hurwitz(
              {Partition({2, 1}), Partition({2, 1}), ones, ones}));
    CHECK(euler_characteristic(three, three, 2) == 0);
    CHECK(euler_characteristic(ones, ones, 0) == 6);
}

TEST_CASE("domain errors and guards") {
    CHECK_THROWS_AS(hurwitz({Partition({2}), Partition({3})}), DomainError);
    CHECK_THROWS_AS(hurwitz({}), DomainError);
    CHECK_THROWS_AS(brute_force_hurwitz({Partition({7}), Partition({7})}), DomainError);
}
