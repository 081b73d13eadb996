#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "symid/var_name.hpp"

namespace symid
{

/// Sparse exponent vector. Each entry packs a variable id (high 32 bits) and
/// a positive exponent (low 32 bits); entries are sorted by id and zero
/// exponents are never stored, so equal monomials have equal storage.
class Monomial
{
public:
    Monomial() = default;
    static Monomial of(VarName v, std::uint32_t exp = 1);

    bool is_one() const { return m_packed.empty(); }
    std::size_t size() const { return m_packed.size(); }

    std::uint32_t degree(VarName v) const;
    std::uint64_t total_degree() const;

    /// (variable, exponent) pairs in id order.
    std::vector<std::pair<VarName, std::uint32_t>> factors() const;

    /// Copy with variable v removed, together with v's exponent.
    std::pair<Monomial, std::uint32_t> split(VarName v) const;

    friend Monomial operator*(const Monomial &a, const Monomial &b);
    friend bool operator==(const Monomial &, const Monomial &) = default;

    std::size_t hash() const noexcept;

private:
    std::vector<std::uint64_t> m_packed;
};

struct MonomialHash {
    std::size_t operator()(const Monomial &m) const noexcept { return m.hash(); }
};

} // namespace symid
