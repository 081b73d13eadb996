#include "symid/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace symid
{

Rational::Rational(const Integer &num, const Integer &den)
{
    if (den.is_zero()) {
        throw std::domain_error("rational with zero denominator");
    }
    m_value = mpq_class(num.raw(), den.raw());
    m_value.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(Integer::parse(text));
    }
    return Rational(Integer::parse(text.substr(0, slash)), Integer::parse(text.substr(slash + 1)));
}

Rational Rational::abs() const
{
    return Rational(mpq_class(::abs(m_value)));
}

Rational Rational::inverse() const
{
    if (is_zero()) {
        throw std::domain_error("inverse of zero");
    }
    return Rational(mpq_class(1 / m_value));
}

Rational Rational::pow(const Rational &base, long exp)
{
    if (exp < 0) {
        return pow(base.inverse(), -exp);
    }
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.m_value.get_num_mpz_t(), static_cast<unsigned long>(exp));
    mpz_pow_ui(den.get_mpz_t(), base.m_value.get_den_mpz_t(), static_cast<unsigned long>(exp));
    return Rational(Integer(std::move(num)), Integer(std::move(den)));
}

std::string Rational::to_string() const
{
    return m_value.get_str();
}

Rational Rational::operator-() const
{
    return Rational(mpq_class(-m_value));
}

Rational &Rational::operator/=(const Rational &o)
{
    if (o.is_zero()) {
        throw std::domain_error("division by zero");
    }
    m_value /= o.m_value;
    return *this;
}

std::ostream &operator<<(std::ostream &os, const Rational &v)
{
    return os << v.to_string();
}

Rational rat_arith(const Rational &a, const Rational &b, ArithKind kind)
{
    switch (kind) {
    case ArithKind::add:
        return a + b;
    case ArithKind::sub:
        return a - b;
    case ArithKind::mul:
        return a * b;
    case ArithKind::div:
        return a / b;
    }
    throw std::invalid_argument("rat_arith: unknown operation");
}

} // namespace symid
