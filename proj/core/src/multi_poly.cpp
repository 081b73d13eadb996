#include "symid/multi_poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace symid
{

MultiPoly::MultiPoly(const Rational &c)
{
    if (!c.is_zero()) {
        m_terms.emplace(Monomial{}, c);
    }
}

MultiPoly MultiPoly::variable(VarName v)
{
    return term(Rational(1), Monomial::of(v));
}

MultiPoly MultiPoly::term(const Rational &c, Monomial m)
{
    MultiPoly p;
    if (!c.is_zero()) {
        p.m_terms.emplace(std::move(m), c);
    }
    return p;
}

bool MultiPoly::is_constant() const
{
    return m_terms.empty() || (m_terms.size() == 1 && m_terms.begin()->first.is_one());
}

Rational MultiPoly::coefficient(const Monomial &m) const
{
    auto it = m_terms.find(m);
    return it == m_terms.end() ? Rational(0) : it->second;
}

std::uint32_t MultiPoly::degree(VarName v) const
{
    std::uint32_t d = 0;
    for (const auto &[m, c] : m_terms) {
        d = std::max(d, m.degree(v));
    }
    return d;
}

std::uint64_t MultiPoly::degree_in(const std::vector<VarName> &vars) const
{
    std::uint64_t d = 0;
    for (const auto &[m, c] : m_terms) {
        std::uint64_t s = 0;
        for (auto v : vars) {
            s += m.degree(v);
        }
        d = std::max(d, s);
    }
    return d;
}

std::uint64_t MultiPoly::total_degree() const
{
    std::uint64_t d = 0;
    for (const auto &[m, c] : m_terms) {
        d = std::max(d, m.total_degree());
    }
    return d;
}

std::vector<VarName> MultiPoly::variables() const
{
    std::vector<VarName> out;
    for (const auto &[m, c] : m_terms) {
        for (const auto &[v, e] : m.factors()) {
            if (std::find(out.begin(), out.end(), v) == out.end()) {
                out.push_back(v);
            }
        }
    }
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

void MultiPoly::add_term(const Monomial &m, const Rational &c)
{
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = m_terms.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            m_terms.erase(it);
        }
    }
}

MultiPoly MultiPoly::operator-() const
{
    MultiPoly out = *this;
    for (auto &[m, c] : out.m_terms) {
        c = -c;
    }
    return out;
}

MultiPoly &MultiPoly::operator+=(const MultiPoly &o)
{
    if (this == &o) {
        return *this *= Rational(2);
    }
    for (const auto &[m, c] : o.m_terms) {
        add_term(m, c);
    }
    return *this;
}

MultiPoly &MultiPoly::operator-=(const MultiPoly &o)
{
    if (this == &o) {
        m_terms.clear();
        return *this;
    }
    for (const auto &[m, c] : o.m_terms) {
        add_term(m, -c);
    }
    return *this;
}

MultiPoly operator*(const MultiPoly &a, const MultiPoly &b)
{
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    if (b.is_constant()) {
        return a * b.constant_term();
    }
    if (a.is_constant()) {
        return b * a.constant_term();
    }
    MultiPoly out;
    out.m_terms.reserve(a.size() * b.size());
    for (const auto &[ma, ca] : a.m_terms) {
        for (const auto &[mb, cb] : b.m_terms) {
            auto [it, inserted] = out.m_terms.try_emplace(ma * mb);
            it->second += ca * cb;
        }
    }
    std::erase_if(out.m_terms, [](const auto &kv) { return kv.second.is_zero(); });
    return out;
}

MultiPoly &MultiPoly::operator*=(const MultiPoly &o)
{
    *this = *this * o;
    return *this;
}

MultiPoly &MultiPoly::operator*=(const Rational &c)
{
    if (c.is_zero()) {
        m_terms.clear();
        return *this;
    }
    for (auto &[m, coef] : m_terms) {
        coef *= c;
    }
    return *this;
}

std::vector<std::pair<Monomial, Rational>> MultiPoly::sorted_terms() const
{
    std::vector<VarName> vars = variables();
    std::unordered_map<std::uint32_t, std::size_t> rank;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        rank.emplace(vars[i].id(), i);
    }
    struct Keyed {
        std::vector<std::uint32_t> dense;
        const Monomial *m;
        const Rational *c;
    };
    std::vector<Keyed> keyed;
    keyed.reserve(m_terms.size());
    for (const auto &[m, c] : m_terms) {
        Keyed k{std::vector<std::uint32_t>(vars.size(), 0), &m, &c};
        for (const auto &[v, e] : m.factors()) {
            k.dense[rank.at(v.id())] = e;
        }
        keyed.push_back(std::move(k));
    }
    std::sort(keyed.begin(), keyed.end(), [](const Keyed &a, const Keyed &b) { return a.dense > b.dense; });
    std::vector<std::pair<Monomial, Rational>> out;
    out.reserve(keyed.size());
    for (const auto &k : keyed) {
        out.emplace_back(*k.m, *k.c);
    }
    return out;
}

std::string MultiPoly::to_string() const
{
    if (is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto &[m, c] : sorted_terms()) {
        if (first) {
            if (c.sign() < 0) {
                os << '-';
            }
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        const Rational mag = c.abs();

        auto factors = m.factors();
        std::sort(factors.begin(), factors.end(),
                  [](const auto &a, const auto &b) { return canonical_less(a.first, b.first); });
        bool need_sep = false;
        if (factors.empty() || mag != Rational(1)) {
            os << mag.to_string();
            need_sep = true;
        }
        for (const auto &[v, e] : factors) {
            if (need_sep) {
                os << " * ";
            }
            os << v.name();
            if (e != 1) {
                os << '^' << e;
            }
            need_sep = true;
        }
    }
    return os.str();
}

MultiPoly poly_arith(const MultiPoly &p, const MultiPoly &q, PolyArithKind kind)
{
    switch (kind) {
    case PolyArithKind::add:
        return p + q;
    case PolyArithKind::sub:
        return p - q;
    case PolyArithKind::mul:
        return p * q;
    }
    throw std::invalid_argument("poly_arith: unknown operation");
}

MultiPoly pow(const MultiPoly &p, unsigned exp)
{
    MultiPoly result(1);
    MultiPoly base = p;
    while (exp != 0) {
        if (exp & 1u) {
            result *= base;
        }
        exp >>= 1;
        if (exp != 0) {
            base = base * base;
        }
    }
    return result;
}

namespace
{

/// Caches successive powers of one polynomial.
class PowerCache
{
public:
    explicit PowerCache(const MultiPoly &base) : m_powers{MultiPoly(1), base} {}

    const MultiPoly &get(std::uint32_t e)
    {
        while (m_powers.size() <= e) {
            m_powers.push_back(m_powers.back() * m_powers[1]);
        }
        return m_powers[e];
    }

private:
    std::vector<MultiPoly> m_powers;
};

} // namespace

MultiPoly substitute(const MultiPoly &p, VarName v, const MultiPoly &q)
{
    // Group p by the exponent of v, then expand each group against q^e.
    std::map<std::uint32_t, MultiPoly> groups;
    bool any = false;
    for (const auto &[m, c] : p.terms()) {
        auto [rest, e] = m.split(v);
        any = any || e != 0;
        groups[e].add_term(rest, c);
    }
    if (!any) {
        return p;
    }
    PowerCache powers(q);
    MultiPoly out;
    for (const auto &[e, coeff] : groups) {
        out += coeff * powers.get(e);
    }
    return out;
}

MultiPoly substitute(const MultiPoly &p, const std::vector<std::pair<VarName, MultiPoly>> &subs)
{
    if (subs.empty()) {
        return p;
    }
    std::vector<PowerCache> caches;
    caches.reserve(subs.size());
    for (const auto &[v, q] : subs) {
        caches.emplace_back(q);
    }
    MultiPoly out;
    for (const auto &[m, c] : p.terms()) {
        Monomial rest = m;
        MultiPoly factor = MultiPoly::term(c, Monomial{});
        for (std::size_t i = 0; i < subs.size(); ++i) {
            auto [r, e] = rest.split(subs[i].first);
            rest = std::move(r);
            if (e != 0) {
                factor = factor * caches[i].get(e);
            }
        }
        out += factor * MultiPoly::term(Rational(1), rest);
    }
    return out;
}

MultiPoly shift_one(const MultiPoly &p, VarName v)
{
    return substitute(p, v, MultiPoly::variable(v) + MultiPoly(1));
}

MultiPoly delta(const MultiPoly &p, VarName v)
{
    return shift_one(p, v) - p;
}

MultiPoly delta_star(const MultiPoly &p, VarName v)
{
    return shift_one(p, v) + p;
}

MultiPoly binom_poly(const MultiPoly &upper, long k)
{
    if (k < 0) {
        return {};
    }
    MultiPoly out(1);
    Integer factorial(1);
    for (long i = 0; i < k; ++i) {
        out *= upper - MultiPoly(i);
        factorial *= Integer(i + 1);
    }
    return out * Rational(Integer(1), factorial);
}

Rational eval(const MultiPoly &p, const Assignment &assignment)
{
    std::unordered_map<std::uint32_t, Rational> values;
    for (auto v : p.variables()) {
        const auto name = v.name();
        auto it = assignment.find(name);
        if (it == assignment.end()) {
            throw std::invalid_argument("eval: no value assigned to variable '" + name + "'");
        }
        values.emplace(v.id(), it->second);
    }
    Rational acc;
    for (const auto &[m, c] : p.terms()) {
        Rational t = c;
        for (const auto &[v, e] : m.factors()) {
            t *= Rational::pow(values.at(v.id()), e);
        }
        acc += t;
    }
    return acc;
}

MultiPoly compose(const std::vector<Rational> &coeffs, const MultiPoly &arg)
{
    MultiPoly out;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        out = out * arg + MultiPoly(*it);
    }
    return out;
}

} // namespace symid
