#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace symid
{

/// Unbounded signed integer. Thin value wrapper over a GMP integer.
class Integer
{
public:
    Integer() = default;
    Integer(long v) : m_value(v) {}
    Integer(int v) : m_value(v) {}
    Integer(unsigned long v) : m_value(v) {}
    Integer(unsigned v) : m_value(v) {}
    explicit Integer(const mpz_class &v) : m_value(v) {}
    explicit Integer(mpz_class &&v) : m_value(std::move(v)) {}

    /// Parses a base-10 integer with optional leading '-'. Throws std::invalid_argument.
    static Integer parse(std::string_view text);

    static Integer pow(const Integer &base, unsigned long exp);

    int sign() const { return sgn(m_value); }
    bool is_zero() const { return sign() == 0; }
    Integer abs() const { return Integer(mpz_class(::abs(m_value))); }
    bool fits_long() const { return m_value.fits_slong_p(); }
    long to_long() const;

    std::string to_string() const { return m_value.get_str(); }
    const mpz_class &raw() const { return m_value; }

    Integer operator-() const { return Integer(mpz_class(-m_value)); }
    Integer &operator+=(const Integer &o) { m_value += o.m_value; return *this; }
    Integer &operator-=(const Integer &o) { m_value -= o.m_value; return *this; }
    Integer &operator*=(const Integer &o) { m_value *= o.m_value; return *this; }

    friend Integer operator+(Integer a, const Integer &b) { return a += b; }
    friend Integer operator-(Integer a, const Integer &b) { return a -= b; }
    friend Integer operator*(Integer a, const Integer &b) { return a *= b; }

    friend bool operator==(const Integer &a, const Integer &b) { return cmp(a.m_value, b.m_value) == 0; }
    friend std::strong_ordering operator<=>(const Integer &a, const Integer &b)
    {
        return cmp(a.m_value, b.m_value) <=> 0;
    }

    friend std::ostream &operator<<(std::ostream &os, const Integer &v);

private:
    mpz_class m_value;
};

Integer gcd(const Integer &a, const Integer &b);

/// Binomial coefficient C(a, k) for a >= 0; zero when k < 0 or k > a.
/// Throws std::invalid_argument if a is negative.
Integer binom_int(const Integer &a, long k);

} // namespace symid
