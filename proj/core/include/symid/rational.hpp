#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "symid/integer.hpp"

namespace symid
{

/// Exact rational number, always in lowest terms with a positive
/// denominator. Zero is 0/1.
class Rational
{
public:
    Rational() = default;
    Rational(long v) : m_value(v) {}
    Rational(int v) : m_value(v) {}
    Rational(const Integer &v) : m_value(v.raw()) {}
    /// Throws std::domain_error when den is zero.
    Rational(const Integer &num, const Integer &den);
    Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

    /// Accepts "p" or "p/q". Throws std::invalid_argument or std::domain_error.
    static Rational parse(std::string_view text);

    Integer num() const { return Integer(m_value.get_num()); }
    Integer den() const { return Integer(m_value.get_den()); }

    int sign() const { return sgn(m_value); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return m_value.get_den() == 1; }
    Rational abs() const;

    /// Throws std::domain_error for zero.
    Rational inverse() const;
    static Rational pow(const Rational &base, long exp);

    /// "p" when the denominator is 1, otherwise "p/q".
    std::string to_string() const;
    const mpq_class &raw() const { return m_value; }

    Rational operator-() const;
    Rational &operator+=(const Rational &o) { m_value += o.m_value; return *this; }
    Rational &operator-=(const Rational &o) { m_value -= o.m_value; return *this; }
    Rational &operator*=(const Rational &o) { m_value *= o.m_value; return *this; }
    Rational &operator/=(const Rational &o);

    friend Rational operator+(Rational a, const Rational &b) { return a += b; }
    friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational &b) { return a /= b; }

    friend bool operator==(const Rational &a, const Rational &b) { return cmp(a.m_value, b.m_value) == 0; }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b)
    {
        return cmp(a.m_value, b.m_value) <=> 0;
    }

    friend std::ostream &operator<<(std::ostream &os, const Rational &v);

private:
    explicit Rational(mpq_class &&v) : m_value(std::move(v)) { m_value.canonicalize(); }

    mpq_class m_value;
};

enum class ArithKind { add, sub, mul, div };

/// Dispatching form of the four field operations.
Rational rat_arith(const Rational &a, const Rational &b, ArithKind kind);

} // namespace symid
