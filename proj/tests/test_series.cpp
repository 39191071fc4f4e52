#include <qhw/series.hpp>

#include <doctest.h>

#include <vector>

using namespace qhw;

namespace {

// Bernoulli numbers B_0..B_8 (B_1 = -1/2 convention):
// 1/(e^{s eps} - 1) = sum_{k >= 0} B_k s^{k-1} eps^{k-1} / k!
const std::vector<Rational> kBernoulli = {
    Rational(1),        Rational(-1, 2), Rational(1, 6),  Rational(0), Rational(-1, 30),
    Rational(0),        Rational(1, 42), Rational(0),     Rational(-1, 30)};

LaurentSeries sample(Var v, long min_deg, std::initializer_list<Rational> cs, long valid) {
    return LaurentSeries(v, min_deg, std::vector<Rational>(cs), valid);
}

}  // namespace

TEST_CASE("bose factor matches the Bernoulli-number expansion") {
    for (long s = 1; s <= 4; ++s) {
        const LaurentSeries b = bose_factor(s, 8);
        CHECK(b.min_degree() == -1);
        for (long k = 0; k <= 8; ++k) {
            Rational want = kBernoulli[static_cast<std::size_t>(k)] / factorial(k);
            want *= pow_rational(Rational(s), k - 1);
            CHECK(b.coeff(k - 1) == want);
        }
    }
}

TEST_CASE("geometric q-series") {
    const LaurentSeries g = geometric_q(3, 11);
    CHECK(g.min_degree() == 3);
    for (long d = 0; d < 11; ++d) CHECK(g.coeff(d) == ((d > 0 && d % 3 == 0) ? 1 : 0));
    // partial sum evaluation at q = 1/2: 1/8 + 1/64 + ... below order 11
    CHECK(evaluate(g, Rational(1, 2)) == Rational(1, 8) + Rational(1, 64) + Rational(1, 512));
}

TEST_CASE("ring identities with validity tracking") {
    const LaurentSeries a = sample(Var::q, -1, {1, 2, 3}, 4);
    const LaurentSeries b = sample(Var::q, 0, {5, 0, -1}, 4);
    const LaurentSeries c = sample(Var::q, 1, {7, 1}, 5);

    CHECK((a + b).coeff(-1) == 1);
    CHECK((a + b).coeff(0) == 7);
    CHECK(((a + b) * c).coeff(0) == (a * c + b * c).coeff(0));
    CHECK(((a + b) * c).coeff(1) == (a * c + b * c).coeff(1));
    CHECK((a * b).valid_order() == 3);  // min(4 + 0, 4 + (-1))
    CHECK((a * b).coeff(-1) == 5);
    CHECK((a * b).coeff(0) == 10);
    CHECK((a * (b * c)).coeff(1) == ((a * b) * c).coeff(1));
    CHECK((a * b).coeff(1) == (b * a).coeff(1));
}

TEST_CASE("inverse round trip and validity") {
    const LaurentSeries a = sample(Var::eps, -2, {3, 1, 0, 5}, 4);
    const LaurentSeries inv = a.inverse();
    CHECK(inv.min_degree() == 2);
    CHECK(inv.valid_order() == 8);  // 4 - 2*(-2)
    const LaurentSeries prod = a * inv;
    CHECK(prod.coeff(0) == 1);
    for (long d = 1; d < prod.valid_order(); ++d) CHECK(prod.coeff(d) == 0);
}

TEST_CASE("exponential series") {
    const LaurentSeries x = LaurentSeries::monomial(Var::eps, 1, 1, 7);
    const LaurentSeries e = exp_series(x);
    for (long k = 0; k < 7; ++k) CHECK(e.coeff(k) == Rational(1, factorial(k)));
    const LaurentSeries em = exp_series(x.scaled(-1));
    const LaurentSeries prod = e * em;
    CHECK(prod.coeff(0) == 1);
    for (long d = 1; d < prod.valid_order(); ++d) CHECK(prod.coeff(d) == 0);
}

TEST_CASE("error paths") {
    const LaurentSeries a = sample(Var::q, 0, {1, 1}, 3);
    CHECK_THROWS_AS(a.coeff(3), DomainError);
    CHECK_THROWS_AS(a.truncated(4), DomainError);
    CHECK_THROWS_AS(LaurentSeries::zero(Var::q, 5).inverse(), DomainError);
    CHECK_THROWS_AS(exp_series(LaurentSeries::constant(Var::q, 1, 4)), DomainError);
    CHECK_THROWS_AS(a + sample(Var::eps, 0, {1}, 3), DomainError);
    CHECK_THROWS_AS(bose_factor(0, 4), DomainError);
    CHECK_THROWS_AS(
        LaurentSeries::monomial(Var::q, 1, LaurentSeries::kMinDegreeFloor - 1, 0),
        DomainError);
}

TEST_CASE("normalization strips hidden zero leading coefficients") {
    const LaurentSeries a = sample(Var::q, -3, {0, 0, 4, 1}, 4);
    CHECK(a.min_degree() == -1);
    CHECK(a.coeff(-1) == 4);
    CHECK(LaurentSeries::zero(Var::q, 6).is_zero());
}
