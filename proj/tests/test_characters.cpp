#include <qhw/characters.hpp>

#include "char_oracle.hpp"

#include <doctest.h>

using namespace qhw;

TEST_CASE("recursion matches the bialternant oracle through n = 5") {
    for (int n = 1; n <= 5; ++n)
        for (const Partition& lam : enumerate_partitions(n))
            for (const Partition& mu : enumerate_partitions(n))
                CHECK(character(lam, mu) == qhw_test::character_oracle(lam, mu));
}

TEST_CASE("row and column orthogonality through n = 6") {
    for (int n = 1; n <= 6; ++n) {
        const auto parts = enumerate_partitions(n);
        for (const Partition& lam : parts)
            for (const Partition& rho : parts) {
                Rational row = 0;
                for (const Partition& mu : parts)
                    row += Rational(character(lam, mu) * character(rho, mu), stats(mu).z_order);
                CHECK(row == (lam == rho ? 1 : 0));
            }
        for (const Partition& mu : parts)
            for (const Partition& nu : parts) {
                Integer col = 0;
                for (const Partition& lam : parts) col += character(lam, mu) * character(lam, nu);
                CHECK(col == (mu == nu ? Integer(stats(mu).z_order) : Integer(0)));
            }
    }
}

TEST_CASE("trivial, sign, and conjugate characters") {
    for (int n = 1; n <= 6; ++n) {
        const Partition triv(std::vector<int>{n});
        const Partition sign(std::vector<int>(static_cast<std::size_t>(n), 1));
        for (const Partition& mu : enumerate_partitions(n)) {
            CHECK(character(triv, mu) == 1);
            CHECK(character(sign, mu) == (mu.colength() % 2 == 0 ? 1 : -1));
        }
        for (const Partition& lam : enumerate_partitions(n))
            for (const Partition& mu : enumerate_partitions(n)) {
                const Integer twist = (mu.colength() % 2 == 0) ? 1 : -1;
                CHECK(character(lam.conjugate(), mu) == twist * character(lam, mu));
            }
    }
}

TEST_CASE("dimension equals the hook-length formula") {
    for (int n = 1; n <= 7; ++n) {
        const Partition id(std::vector<int>(static_cast<std::size_t>(n), 1));
        for (const Partition& lam : enumerate_partitions(n))
            CHECK(character(lam, id) * stats(lam).hook_product == factorial(n));
    }
}

TEST_CASE("known character values") {
    CHECK(character(Partition({2, 1}), Partition({3})) == -1);
    CHECK(character(Partition({2, 1}), Partition({1, 1, 1})) == 2);
    CHECK(character(Partition({2, 1}), Partition({2, 1})) == 0);
    CHECK(character(Partition({2, 2}), Partition({2, 2})) == 2);
    CHECK_THROWS_AS(character(Partition({2}), Partition({3})), DomainError);
}

TEST_CASE("power-sum expansion of Schur functions") {
    // s_(2) = p_(1,1)/2 + p_(2)/2 and s_(1,1) = p_(1,1)/2 - p_(2)/2
    const auto s2 = schur_in_powersums(Partition({2}));
    CHECK(s2.at(Partition({1, 1})) == Rational(1, 2));
    CHECK(s2.at(Partition({2})) == Rational(1, 2));
    const auto s11 = schur_in_powersums(Partition({1, 1}));
    CHECK(s11.at(Partition({1, 1})) == Rational(1, 2));
    CHECK(s11.at(Partition({2})) == Rational(-1, 2));
}
