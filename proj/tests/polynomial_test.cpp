#include <doctest.h>

#include <random>

#include "support/generators.hpp"
#include "tmcf/polynomial.hpp"

using tmcf::Polynomial;
using tmcf::Rational;

namespace {

Polynomial from(std::initializer_list<long> ascending) {
    std::vector<Rational> v;
    for (long c : ascending) v.emplace_back(c);
    return Polynomial(std::move(v));
}

}  // namespace

TEST_CASE("degree and zero polynomial") {
    CHECK(Polynomial().is_zero());
    CHECK(Polynomial().degree() == Polynomial::kDegreeNegInfinity);
    CHECK(Polynomial::kDegreeNegInfinity < -1000000);
    CHECK(from({0}).is_zero());
    CHECK(from({5}).degree() == 0);
    CHECK(from({0, 1}).degree() == 1);
    CHECK(Polynomial::constant(0).is_zero());
    CHECK(Polynomial::monomial(1, 4).degree() == 4);
}

TEST_CASE("division examples") {
    // T^2 + 1 = T * T + 1
    auto [q1, r1] = divrem(from({1, 0, 1}), from({0, 1}));
    CHECK(q1 == from({0, 1}));
    CHECK(r1 == from({1}));

    // (T^8 - 1) / (T^4 - 1) = T^4 + 1 exactly
    auto [q2, r2] = divrem(Polynomial::monomial(1, 8) - Polynomial::constant(1),
                           Polynomial::monomial(1, 4) - Polynomial::constant(1));
    CHECK(q2 == from({1, 0, 0, 0, 1}));
    CHECK(r2.is_zero());

    // identity divisor
    const Polynomial p = from({3, -2, 0, 7});
    auto [q3, r3] = divrem(p, Polynomial::constant(1));
    CHECK(q3 == p);
    CHECK(r3.is_zero());

    CHECK_THROWS_WITH_AS(divrem(p, Polynomial()), "division by zero polynomial",
                         std::domain_error);
}

TEST_CASE("division reconstitutes the numerator exactly") {
    std::mt19937_64 rng(20260809);
    for (int round = 0; round < 200; ++round) {
        const Polynomial num = tmcf::testgen::random_polynomial(rng, 30);
        const Polynomial den = tmcf::testgen::random_polynomial(rng, 30);
        auto [q, r] = divrem(num, den);
        CHECK(num == q * den + r);
        CHECK(r.degree() < den.degree());
    }
}

TEST_CASE("evaluation") {
    CHECK(from({1, 0, 0, 0, 1}).eval(1) == Rational(2));  // T^4 + 1 at 1
    CHECK(Polynomial().eval(Rational(7, 3)) == Rational(0));
    // T - (-1)^n at 1: zero for odd n, 2 for even n
    CHECK((Polynomial::variable() - Polynomial::constant(-1)).eval(1) == Rational(2));
    CHECK((Polynomial::variable() - Polynomial::constant(1)).eval(1) == Rational(0));
    CHECK(from({1, 2, 3}).eval(Rational(1, 2)) == Rational(11, 4));
}

TEST_CASE("derivative") {
    CHECK(from({1, 0, 0, 0, 1}).derivative() == from({0, 0, 0, 4}));
    CHECK(from({9}).derivative().is_zero());
    CHECK(Polynomial().derivative().is_zero());

    std::mt19937_64 rng(7);
    for (int round = 0; round < 100; ++round) {
        const Polynomial a = tmcf::testgen::random_polynomial(rng, 12);
        const Polynomial b = tmcf::testgen::random_polynomial(rng, 12);
        CHECK((a + b).derivative() == a.derivative() + b.derivative());
        CHECK((a * b).derivative() == a.derivative() * b + a * b.derivative());
    }
}

TEST_CASE("compose_power") {
    CHECK(from({1, 1}).compose_power(3) == from({1, 0, 0, 1}));  // T+1 -> T^3+1
    const Polynomial p21 = from({1, 0, 0, 0, 1});                // T^4 + 1
    CHECK(p21.compose_power(4) == Polynomial::monomial(1, 16) + Polynomial::constant(1));
    CHECK(p21.compose_power(4).degree() == 16);
    CHECK(p21.compose_power(1) == p21);
    CHECK_THROWS_AS(p21.compose_power(0), std::invalid_argument);

    std::mt19937_64 rng(11);
    for (int round = 0; round < 100; ++round) {
        const Polynomial p = tmcf::testgen::random_polynomial(rng, 10);
        std::uniform_int_distribution<int> cdist(1, 5);
        const int c = cdist(rng);
        const Rational x = tmcf::testgen::random_rational(rng, 5);
        Rational xc(1);
        for (int j = 0; j < c; ++j) xc *= x;
        CHECK(p.compose_power(c).eval(x) == p.eval(xc));
    }
}

TEST_CASE("text rendering") {
    const Polynomial p = Rational(-1, 2) * Polynomial::monomial(1, 3) + from({-1, 2});
    CHECK(p.to_string() == "-1/2*T^3 + 2*T - 1");
    CHECK(Polynomial().to_string() == "0");
    CHECK(from({1, 1}).to_string() == "T + 1");
    CHECK((Rational(1, 2) * from({-1, 1})).to_string() == "1/2*T - 1/2");
    CHECK(from({-1, 1, 0, 0, -1, 1}).to_string() == "T^5 - T^4 + T - 1");
    CHECK(from({-3}).to_string() == "-3");
}

TEST_CASE("text parsing round trip") {
    CHECK(Polynomial::from_string("-1/2*T^3 + 2*T - 1").to_string() == "-1/2*T^3 + 2*T - 1");
    CHECK(Polynomial::from_string("0").is_zero());
    CHECK(Polynomial::from_string("T") == Polynomial::variable());
    CHECK(Polynomial::from_string("  T^2+T ") == from({0, 1, 1}));
    CHECK_THROWS_AS(Polynomial::from_string("T^"), std::invalid_argument);
    CHECK_THROWS_AS(Polynomial::from_string("2*"), std::invalid_argument);
    CHECK_THROWS_AS(Polynomial::from_string(""), std::invalid_argument);
    CHECK_THROWS_AS(Polynomial::from_string("T^-2"), std::invalid_argument);

    std::mt19937_64 rng(13);
    for (int round = 0; round < 200; ++round) {
        const Polynomial p = tmcf::testgen::random_polynomial(rng, 8);
        CHECK(Polynomial::from_string(p.to_string()) == p);
    }
}
