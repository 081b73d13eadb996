#include <random>
#include <stdexcept>

#include "doctest.h"

#include "symid/integer.hpp"
#include "symid/rational.hpp"

using namespace symid;

TEST_CASE("rational arithmetic examples")
{
    CHECK(rat_arith(Rational(1, 6), Rational(-1, 2), ArithKind::add) == Rational(-1, 3));
    CHECK(rat_arith(Rational(1, 6), Rational(-1, 2), ArithKind::sub) == Rational(2, 3));
    CHECK(rat_arith(Rational(2, 3), Rational(3, 4), ArithKind::mul) == Rational(1, 2));
    CHECK(rat_arith(Rational(2, 3), Rational(4, 3), ArithKind::div) == Rational(1, 2));
    CHECK_THROWS_AS(rat_arith(Rational(1, 3), Rational(0), ArithKind::div), std::domain_error);
    CHECK_THROWS_AS(Rational(1, 3) / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational(0).inverse(), std::domain_error);
}

TEST_CASE("normalization happens at construction")
{
    const Rational half(2, 4);
    CHECK(half.num() == Integer(1));
    CHECK(half.den() == Integer(2));
    CHECK(half.to_string() == "1/2");

    const Rational neg(3, -6);
    CHECK(neg.num() == Integer(-1));
    CHECK(neg.den() == Integer(2));

    const Rational zero(0, -7);
    CHECK(zero.num() == Integer(0));
    CHECK(zero.den() == Integer(1));
    CHECK(zero.to_string() == "0");

    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("parse and print")
{
    CHECK(Rational::parse("-10/4") == Rational(-5, 2));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational::parse("-691/2730").to_string() == "-691/2730");
    CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
    CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK(Integer::parse("-123456789012345678901234567890").to_string() == "-123456789012345678901234567890");
}

TEST_CASE("integer sign invariant")
{
    CHECK(Integer(0).sign() == 0);
    CHECK(Integer(-0).is_zero());
    CHECK(Integer(-5).sign() == -1);
    CHECK((Integer(5) - Integer(5)).sign() == 0);
    CHECK(Integer::pow(Integer(2), 100).to_string() == "1267650600228229401496703205376");
}

TEST_CASE("binom_int examples")
{
    CHECK(binom_int(Integer(5), 2) == Integer(10));
    CHECK(binom_int(Integer(5), -1) == Integer(0));
    CHECK(binom_int(Integer(0), 0) == Integer(1));
    CHECK(binom_int(Integer(5), 6) == Integer(0));
    CHECK_THROWS_AS(binom_int(Integer(-1), 0), std::invalid_argument);
}

TEST_CASE("binom_int symmetry and Pascal recurrence for a <= 30")
{
    for (long a = 0; a <= 30; ++a) {
        for (long k = -2; k <= a + 2; ++k) {
            if (k >= 0 && k <= a) {
                CHECK(binom_int(Integer(a), k) == binom_int(Integer(a), a - k));
            }
            if (a >= 1) {
                CHECK(binom_int(Integer(a), k) == binom_int(Integer(a - 1), k) + binom_int(Integer(a - 1), k - 1));
            }
        }
    }
}

TEST_CASE("field axioms on random triples")
{
    std::mt19937_64 rng(20240917);
    std::uniform_int_distribution<long> num(-1000, 1000), den(1, 1000);
    auto draw = [&] { return Rational(num(rng), den(rng)); };
    for (int trial = 0; trial < 500; ++trial) {
        const Rational a = draw(), b = draw(), c = draw();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == Rational(0));
        if (!b.is_zero()) {
            CHECK((a / b) * b == a);
        }
        // stored form stays canonical
        const Rational s = a * b + c;
        CHECK(gcd(s.num().abs(), s.den()) == Integer(1));
        CHECK(s.den().sign() > 0);
    }
}
