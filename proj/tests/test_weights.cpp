#include <qhw/weights.hpp>

#include <doctest.h>

using namespace qhw;

namespace {
const WeightModel kEPrime{WeightKind::EPrime, {}};
const WeightModel kE{WeightKind::E, {}};
const WeightModel kH{WeightKind::H, {}};
const Rational kHalf(1, 2);
}  // namespace

TEST_CASE("closed-form weights at q = 1/2") {
    // w_{E'}((d)) = q^d / (1 - q^d)
    CHECK(weight_on_Pd(kEPrime, Partition({1}), kHalf) == 1);
    CHECK(weight_on_Pd(kEPrime, Partition({2}), kHalf) == Rational(1, 3));
    CHECK(weight_on_Pd(kEPrime, Partition({1, 1}), kHalf) == Rational(1, 3));
    // w_E((1)) = sum_{i >= 0} q^i = 1/(1-q)
    CHECK(weight_on_Pd(kE, Partition({1}), kHalf) == 2);
    // H carries the sign (-1)^{colength}
    CHECK(weight_on_Pd(kH, Partition({2}), kHalf) < 0);
    CHECK(weight_on_Pd(kH, Partition({1, 1}), kHalf) > 0);
}

TEST_CASE("indicator and finite-parameter models") {
    const WeightModel expm{WeightKind::Exp, {}};
    const WeightModel belyi{WeightKind::Belyi, {}};
    CHECK(weight_on_Pd(expm, Partition({1, 1}), {}) == 1);
    CHECK(weight_on_Pd(expm, Partition({2}), {}) == 0);
    CHECK(weight_on_Pd(belyi, Partition({2}), {}) == 1);
    CHECK(weight_on_Pd(belyi, Partition({1, 1}), {}) == 0);
    // m_lambda(c): m_{(2,1)}(c1, c2) = c1^2 c2 + c2^2 c1
    const WeightModel fin = WeightModel::parse("finite:2,3");
    CHECK(weight_on_Pd(fin, Partition({2, 1}), {}) == Rational(30));
    CHECK(weight_on_Pd(fin, Partition({1, 1}), {}) == Rational(6));  // m_(1,1) = c1 c2
    CHECK(weight_on_Pd(fin, Partition({1, 1, 1}), {}) == 0);         // needs three parameters
}

TEST_CASE("defining multisum converges to the closed form with a geometric tail bound") {
    for (const auto& model : {kEPrime, kE, kH})
        for (const Rational& q : {Rational(1, 2), Rational(1, 3)})
            for (const Partition& lam :
                 {Partition({1}), Partition({2}), Partition({1, 1}), Partition({2, 1})}) {
                const std::vector<int>& x = lam.parts();
                const int k = lam.length();
                Rational closed = weight_on_Pd(model, lam, q);
                if (model.kind == WeightKind::H && lam.colength() % 2 != 0) closed = -closed;
                const int bound = 40;
                const Rational truncated = multisum_oracle(model, x, q, bound);
                Rational tail = pow_rational(q, bound + 1) * factorial(k) /
                                stats(lam).aut_order;
                for (int a : x) tail /= 1 - pow_rational(q, a);
                CHECK(truncated <= closed);
                CHECK(closed - truncated <= tail);
            }
}

TEST_CASE("q-series of weights") {
    // w_{E'}((1,1)) = q^3 / ((1-q)(1-q^2)) = q^3 + q^4 + 2q^5 + ...
    const LaurentSeries w11 = weight_q_series(kEPrime, Partition({1, 1}), 6);
    CHECK(w11.coeff(2) == 0);
    CHECK(w11.coeff(3) == 1);
    CHECK(w11.coeff(4) == 1);
    CHECK(w11.coeff(5) == 2);
    // w_{E'}((d)) = q^d + q^{2d} + ...
    const LaurentSeries w2 = weight_q_series(kEPrime, Partition({2}), 6);
    CHECK(w2.coeff(2) == 1);
    CHECK(w2.coeff(3) == 0);
    CHECK(w2.coeff(4) == 1);
    // evaluation converges to the exact value from below at q = 1/2
    const Rational exact = weight_on_Pd(kEPrime, Partition({2, 1}), kHalf);
    const Rational e10 = evaluate(weight_q_series(kEPrime, Partition({2, 1}), 10), kHalf);
    const Rational e20 = evaluate(weight_q_series(kEPrime, Partition({2, 1}), 20), kHalf);
    CHECK(e10 < e20);
    CHECK(e20 < exact);
    CHECK(exact - e20 < Rational(1, 1 << 14));
}

TEST_CASE("eps-series of weights at q = e^{-eps}") {
    const LaurentSeries w11 = weight_eps_series(kEPrime, Partition({1, 1}), 1);
    CHECK(w11.coeff(-2) == Rational(1, 2));
    CHECK(w11.coeff(-1) == Rational(-3, 4));
    CHECK(w11.coeff(0) == Rational(11, 24));
    const LaurentSeries wd = weight_eps_series(kEPrime, Partition({3}), 1);
    CHECK(wd.coeff(-1) == Rational(1, 3));  // bose factor 1/(e^{3 eps} - 1)
    CHECK(wd.coeff(0) == Rational(-1, 2));
    const LaurentSeries we = weight_eps_series(kE, Partition({1}), 2);
    CHECK(we.coeff(-1) == 1);
    CHECK(we.coeff(0) == Rational(1, 2));
    // H sign at odd colength
    const LaurentSeries wh = weight_eps_series(kH, Partition({2}), 1);
    CHECK(wh.coeff(-1) == Rational(-1, 2));
    CHECK_THROWS_AS(weight_eps_series(WeightModel{WeightKind::Exp, {}}, Partition({1}), 2),
                    DomainError);
}

TEST_CASE("generating function coefficients") {
    CHECK(gen_function_coeff(kEPrime, 0, kHalf) == 1);
    CHECK(gen_function_coeff(kEPrime, 1, kHalf) == 1);           // q/(1-q)
    CHECK(gen_function_coeff(kEPrime, 2, kHalf) == Rational(1, 3));  // q^3/((1-q)(1-q^2))
    CHECK(gen_function_coeff(kE, 1, kHalf) == 2);                // 1/(1-q)
    CHECK(gen_function_coeff(kH, 2, kHalf) == Rational(8, 3));   // 1/((1-q)(1-q^2))
    CHECK_THROWS_AS(gen_function_coeff(kEPrime, 1, Rational(3, 2)), DomainError);
}

TEST_CASE("quantum dilogarithm identities") {
    for (const Rational& q : {Rational(1, 2), Rational(1, 3)}) {
        const auto rep = dilog_check(q, 8);
        CHECK(rep.all_ok());
    }
}

TEST_CASE("model parsing round trip") {
    for (const char* tag : {"eprime", "e", "h", "exp", "belyi", "finite:1/2,2"})
        CHECK(WeightModel::parse(tag).tag() == tag);
    CHECK_THROWS_AS(WeightModel::parse("bogus"), DomainError);
    CHECK_THROWS_AS(check_q(Rational(1)), DomainError);
    CHECK_THROWS_AS(check_q(Rational(0)), DomainError);
}
