#include "symid/monomial.hpp"

#include <algorithm>

namespace symid
{
namespace
{

constexpr std::uint64_t pack(std::uint32_t id, std::uint32_t exp)
{
    return (static_cast<std::uint64_t>(id) << 32) | exp;
}
constexpr std::uint32_t id_of(std::uint64_t p) { return static_cast<std::uint32_t>(p >> 32); }
constexpr std::uint32_t exp_of(std::uint64_t p) { return static_cast<std::uint32_t>(p); }

} // namespace

Monomial Monomial::of(VarName v, std::uint32_t exp)
{
    Monomial m;
    if (exp != 0) {
        m.m_packed.push_back(pack(v.id(), exp));
    }
    return m;
}

std::uint32_t Monomial::degree(VarName v) const
{
    auto it = std::lower_bound(m_packed.begin(), m_packed.end(), pack(v.id(), 0));
    return (it != m_packed.end() && id_of(*it) == v.id()) ? exp_of(*it) : 0;
}

std::uint64_t Monomial::total_degree() const
{
    std::uint64_t d = 0;
    for (auto p : m_packed) {
        d += exp_of(p);
    }
    return d;
}

std::vector<std::pair<VarName, std::uint32_t>> Monomial::factors() const
{
    std::vector<std::pair<VarName, std::uint32_t>> out;
    out.reserve(m_packed.size());
    for (auto p : m_packed) {
        out.emplace_back(VarName::from_id(id_of(p)), exp_of(p));
    }
    return out;
}

std::pair<Monomial, std::uint32_t> Monomial::split(VarName v) const
{
    Monomial rest;
    std::uint32_t e = 0;
    rest.m_packed.reserve(m_packed.size());
    for (auto p : m_packed) {
        if (id_of(p) == v.id()) {
            e = exp_of(p);
        } else {
            rest.m_packed.push_back(p);
        }
    }
    return {std::move(rest), e};
}

Monomial operator*(const Monomial &a, const Monomial &b)
{
    Monomial out;
    out.m_packed.reserve(a.m_packed.size() + b.m_packed.size());
    auto i = a.m_packed.begin();
    auto j = b.m_packed.begin();
    while (i != a.m_packed.end() && j != b.m_packed.end()) {
        const auto ia = id_of(*i);
        const auto jb = id_of(*j);
        if (ia < jb) {
            out.m_packed.push_back(*i++);
        } else if (jb < ia) {
            out.m_packed.push_back(*j++);
        } else {
            out.m_packed.push_back(pack(ia, exp_of(*i) + exp_of(*j)));
            ++i;
            ++j;
        }
    }
    out.m_packed.insert(out.m_packed.end(), i, a.m_packed.end());
    out.m_packed.insert(out.m_packed.end(), j, b.m_packed.end());
    return out;
}

std::size_t Monomial::hash() const noexcept
{
    // FNV-1a style mix over packed words.
    std::uint64_t h = 1469598103934665603ull;
    for (auto p : m_packed) {
        h ^= p + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
}

} // namespace symid
