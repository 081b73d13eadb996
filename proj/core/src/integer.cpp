#include "symid/integer.hpp"

#include <ostream>
#include <stdexcept>

namespace symid
{

Integer Integer::parse(std::string_view text)
{
    std::string s(text);
    if (s.empty() || s == "-" || s.find_first_not_of("-0123456789") != std::string::npos
        || s.find('-', 1) != std::string::npos) {
        throw std::invalid_argument("not an integer: '" + s + "'");
    }
    return Integer(mpz_class(s, 10));
}

Integer Integer::pow(const Integer &base, unsigned long exp)
{
    mpz_class out;
    mpz_pow_ui(out.get_mpz_t(), base.m_value.get_mpz_t(), exp);
    return Integer(std::move(out));
}

long Integer::to_long() const
{
    if (!fits_long()) {
        throw std::overflow_error("integer does not fit in long: " + to_string());
    }
    return m_value.get_si();
}

std::ostream &operator<<(std::ostream &os, const Integer &v)
{
    return os << v.m_value;
}

Integer gcd(const Integer &a, const Integer &b)
{
    return Integer(mpz_class(::gcd(a.raw(), b.raw())));
}

Integer binom_int(const Integer &a, long k)
{
    if (a.sign() < 0) {
        throw std::invalid_argument("binom_int: upper argument must be non-negative, got " + a.to_string());
    }
    if (k < 0 || Integer(k) > a) {
        return Integer(0);
    }
    mpz_class out;
    mpz_bin_ui(out.get_mpz_t(), a.raw().get_mpz_t(), static_cast<unsigned long>(k));
    return Integer(std::move(out));
}

} // namespace symid
