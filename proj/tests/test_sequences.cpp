#include <thread>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"

#include "symid/polyfam.hpp"
#include "symid/sequences.hpp"

using namespace symid;

TEST_CASE("bernoulli_number examples")
{
    CHECK(bernoulli_number(0) == Rational(1));
    CHECK(bernoulli_number(1) == Rational(-1, 2));
    CHECK(bernoulli_number(2) == Rational(1, 6));
    CHECK(bernoulli_number(3) == Rational(0));
    CHECK(bernoulli_number(4) == Rational(-1, 30));
}

TEST_CASE("euler_number examples")
{
    CHECK(euler_number(0) == Rational(1));
    CHECK(euler_number(1) == Rational(0));
    CHECK(euler_number(2) == Rational(-1));
    CHECK(euler_number(4) == Rational(5));
}

TEST_CASE("b_tilde examples")
{
    CHECK(b_tilde(1) == Rational(-1));
    CHECK(b_tilde(2) == Rational(1));
    CHECK(b_tilde(3) == Rational(0));
    CHECK(b_tilde(4) == Rational(-2));
    CHECK(b_tilde(6) == Rational(16));
    CHECK(b_tilde(8) == Rational(-272));
    CHECK_THROWS_AS(b_tilde(0), std::invalid_argument);
}

TEST_CASE("euler_at_zero examples")
{
    CHECK(euler_at_zero(0) == Rational(1));
    CHECK(euler_at_zero(1) == Rational(-1, 2));
    CHECK(euler_at_zero(2) == Rational(0));
    CHECK(euler_at_zero(3) == Rational(1, 4));
    CHECK(euler_at_zero(7) == Rational(17, 8));
}

TEST_CASE("agreement with independent algorithms")
{
    const auto bern = oracle::bernoulli_akiyama_tanigawa(24);
    for (std::size_t k = 0; k <= 24; ++k) {
        CHECK(bernoulli_number(k) == bern[k]);
    }
    const auto eul = oracle::euler_seidel(20);
    for (std::size_t k = 0; k <= 20; ++k) {
        CHECK(euler_number(k) == eul[k]);
    }
}

TEST_CASE("frozen large values")
{
    CHECK(bernoulli_number(12) == Rational::parse("-691/2730"));
    CHECK(bernoulli_number(20) == Rational::parse("-174611/330"));
    CHECK(bernoulli_number(60) == Rational::parse("-1215233140483755572040304994079820246041491/56786730"));
    CHECK(euler_number(10) == Rational(-50521));
    CHECK(euler_number(20) == Rational::parse("370371188237525"));
}

TEST_CASE("recurrence residuals, parity and integrality up to 60")
{
    for (std::size_t n = 1; n <= 60; ++n) {
        CHECK(bernoulli_recurrence_residual(n).is_zero());
        CHECK(euler_recurrence_residual(n).is_zero());
    }
    for (std::size_t k = 3; k <= 60; k += 2) {
        CHECK(bernoulli_number(k).is_zero());
    }
    for (std::size_t k = 0; k <= 60; ++k) {
        CHECK(euler_number(k).is_integer());
        if (k % 2) {
            CHECK(euler_number(k).is_zero());
        }
    }
}

TEST_CASE("cross-checks against the polynomial families")
{
    const VarName x = VarName::of("x");
    for (std::size_t k = 0; k <= 30; ++k) {
        CHECK(euler_at_zero(k) == euler_poly(k, x).constant_term());
        const Rational half_value = eval(bernoulli_poly(k, x), {{"x", Rational(1, 2)}});
        const Rational expected = (Rational::pow(Rational(2), 1 - static_cast<long>(k)) - Rational(1)) * bernoulli_number(k);
        CHECK(half_value == expected);
    }
}

TEST_CASE("table grows monotonically and is safe under concurrent extension")
{
    SequenceTable table(SequenceKind::bernoulli);
    CHECK(table.high_water() == 0);
    CHECK(table.at(5) == Rational(0));
    CHECK(table.high_water() == 5);
    table.at(2);
    CHECK(table.high_water() == 5);

    SequenceTable shared(SequenceKind::euler);
    std::vector<std::thread> threads;
    std::vector<Rational> seen(8);
    for (unsigned t = 0; t < 8; ++t) {
        threads.emplace_back([&, t] {
            for (std::size_t k = 0; k <= 40; ++k) {
                shared.at(k + t);
            }
            seen[t] = shared.at(40);
        });
    }
    for (auto &th : threads) {
        th.join();
    }
    for (const auto &v : seen) {
        CHECK(v == euler_number(40));
    }
    CHECK(shared.high_water() == 47);
    const auto values = shared.values(47);
    CHECK(values.size() == 48);
}
