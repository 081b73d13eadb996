#include "symid/polyfam.hpp"

#include <deque>
#include <mutex>
#include <stdexcept>

#include "symid/sequences.hpp"

namespace symid
{
namespace
{

Rational binom_q(std::size_t a, std::size_t k)
{
    return Rational(binom_int(Integer(static_cast<unsigned long>(a)), static_cast<long>(k)));
}

std::vector<Rational> build_bernoulli(std::size_t n)
{
    std::vector<Rational> c(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        c[n - k] = binom_q(n, k) * bernoulli_number(k);
    }
    return c;
}

std::vector<Rational> build_euler(std::size_t n)
{
    // sum_k C(n,k) E_k / 2^k (x - 1/2)^{n-k}, expanded term by term.
    std::vector<Rational> c(n + 1);
    const Rational minus_half(-1, 2);
    for (std::size_t k = 0; k <= n; ++k) {
        const Rational ek = euler_number(k);
        if (ek.is_zero()) {
            continue;
        }
        const Rational outer = binom_q(n, k) * ek / Rational::pow(Rational(2), static_cast<long>(k));
        const std::size_t j = n - k;
        for (std::size_t i = 0; i <= j; ++i) {
            c[i] += outer * binom_q(j, i) * Rational::pow(minus_half, static_cast<long>(j - i));
        }
    }
    return c;
}

/// Thread-safe memo of coefficient vectors. References stay valid because
/// entries live in a deque that only grows.
class CoefficientCache
{
public:
    using Builder = std::vector<Rational> (*)(std::size_t);
    explicit CoefficientCache(Builder b) : m_build(b) {}

    const std::vector<Rational> &get(std::size_t n)
    {
        std::lock_guard lock(m_mutex);
        while (m_entries.size() <= n) {
            m_entries.push_back(m_build(m_entries.size()));
        }
        return m_entries[n];
    }

private:
    Builder m_build;
    std::mutex m_mutex;
    std::deque<std::vector<Rational>> m_entries;
};

} // namespace

const std::vector<Rational> &bernoulli_coefficients(std::size_t n)
{
    static CoefficientCache cache(&build_bernoulli);
    return cache.get(n);
}

const std::vector<Rational> &euler_coefficients(std::size_t n)
{
    static CoefficientCache cache(&build_euler);
    return cache.get(n);
}

MultiPoly bernoulli_poly(std::size_t n, VarName v)
{
    return compose(bernoulli_coefficients(n), MultiPoly::variable(v));
}

MultiPoly euler_poly(std::size_t n, VarName v)
{
    return compose(euler_coefficients(n), MultiPoly::variable(v));
}

MultiPoly bernoulli_poly_shifted(std::size_t n, const MultiPoly &arg)
{
    return compose(bernoulli_coefficients(n), arg);
}

MultiPoly euler_poly_shifted(std::size_t n, const MultiPoly &arg)
{
    return compose(euler_coefficients(n), arg);
}

AppellSpec AppellSpec::symbolic(const std::string &family, std::size_t n)
{
    AppellSpec s;
    for (std::size_t l = 0; l <= n; ++l) {
        s.coeffs.emplace_back(VarName::of(family + "_" + std::to_string(l)));
    }
    return s;
}

AppellSpec AppellSpec::numeric(std::vector<Rational> values)
{
    AppellSpec s;
    for (auto &v : values) {
        s.coeffs.emplace_back(std::move(v));
    }
    return s;
}

AppellSpec AppellSpec::bernoulli(std::size_t n)
{
    std::vector<Rational> v;
    for (std::size_t l = 0; l <= n; ++l) {
        v.push_back(l % 2 ? -bernoulli_number(l) : bernoulli_number(l));
    }
    return numeric(std::move(v));
}

AppellSpec AppellSpec::euler(std::size_t n)
{
    std::vector<Rational> v;
    for (std::size_t l = 0; l <= n; ++l) {
        v.push_back(l % 2 ? -euler_at_zero(l) : euler_at_zero(l));
    }
    return numeric(std::move(v));
}

MultiPoly appell_poly(const AppellSpec &spec, std::size_t k, const MultiPoly &arg)
{
    if (k >= spec.coeffs.size()) {
        throw std::out_of_range("appell_poly: degree " + std::to_string(k) + " needs coefficients a_0..a_"
                                + std::to_string(k) + ", spec has " + std::to_string(spec.coeffs.size()));
    }
    std::vector<MultiPoly> powers{MultiPoly(1)};
    for (std::size_t j = 1; j <= k; ++j) {
        powers.push_back(powers.back() * arg);
    }
    MultiPoly out;
    for (std::size_t l = 0; l <= k; ++l) {
        Rational scale = binom_q(k, l);
        if (l % 2) {
            scale = -scale;
        }
        const MultiPoly a = std::visit(
            [](const auto &entry) -> MultiPoly {
                if constexpr (std::is_same_v<std::decay_t<decltype(entry)>, VarName>) {
                    return MultiPoly::variable(entry);
                } else {
                    return MultiPoly(entry);
                }
            },
            spec.coeffs[l]);
        out += a * powers[k - l] * scale;
    }
    return out;
}

MultiPoly appell_poly(const AppellSpec &spec, std::size_t k, VarName v)
{
    return appell_poly(spec, k, MultiPoly::variable(v));
}

} // namespace symid
