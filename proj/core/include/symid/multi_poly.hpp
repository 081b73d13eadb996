#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "symid/monomial.hpp"
#include "symid/rational.hpp"
#include "symid/var_name.hpp"

namespace symid
{

/// Sparse multivariate polynomial over the rationals.
///
/// Invariant: no stored coefficient is zero. The zero polynomial has no
/// terms, and two polynomials are equal iff their term maps are equal.
class MultiPoly
{
public:
    using TermMap = std::unordered_map<Monomial, Rational, MonomialHash>;

    MultiPoly() = default;
    MultiPoly(const Rational &c);
    MultiPoly(long c) : MultiPoly(Rational(c)) {}

    static MultiPoly variable(VarName v);
    static MultiPoly term(const Rational &c, Monomial m);

    const TermMap &terms() const { return m_terms; }
    std::size_t size() const { return m_terms.size(); }
    bool is_zero() const { return m_terms.empty(); }
    bool is_constant() const;

    /// Coefficient of m, zero when absent.
    Rational coefficient(const Monomial &m) const;
    Rational constant_term() const { return coefficient(Monomial{}); }

    std::uint32_t degree(VarName v) const;
    /// Largest sum of exponents over the given variables.
    std::uint64_t degree_in(const std::vector<VarName> &vars) const;
    std::uint64_t total_degree() const;

    /// Occurring variables in canonical order.
    std::vector<VarName> variables() const;

    /// Adds c*m in place, dropping the term if it cancels.
    void add_term(const Monomial &m, const Rational &c);

    MultiPoly operator-() const;
    MultiPoly &operator+=(const MultiPoly &o);
    MultiPoly &operator-=(const MultiPoly &o);
    MultiPoly &operator*=(const MultiPoly &o);
    MultiPoly &operator*=(const Rational &c);

    friend MultiPoly operator+(MultiPoly a, const MultiPoly &b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly &b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly &a, const MultiPoly &b);
    friend MultiPoly operator*(MultiPoly a, const Rational &c) { return a *= c; }
    friend MultiPoly operator*(const Rational &c, MultiPoly a) { return a *= c; }

    friend bool operator==(const MultiPoly &a, const MultiPoly &b) { return a.m_terms == b.m_terms; }

    /// Terms in canonical order: descending lexicographic on exponent
    /// vectors, with variables in canonical_less order.
    std::vector<std::pair<Monomial, Rational>> sorted_terms() const;

    /// Deterministic text form, e.g. `x^2 - x + 1/6` or `3/2 * r_1^2 * x_1`.
    std::string to_string() const;

private:
    TermMap m_terms;
};

enum class PolyArithKind { add, sub, mul };
MultiPoly poly_arith(const MultiPoly &p, const MultiPoly &q, PolyArithKind kind);

MultiPoly pow(const MultiPoly &p, unsigned exp);

/// Replaces every occurrence of v in p by q, expanded.
MultiPoly substitute(const MultiPoly &p, VarName v, const MultiPoly &q);

/// Simultaneous substitution of several variables.
MultiPoly substitute(const MultiPoly &p, const std::vector<std::pair<VarName, MultiPoly>> &subs);

/// p with v replaced by v + 1.
MultiPoly shift_one(const MultiPoly &p, VarName v);

/// Forward difference P(v+1) - P(v).
MultiPoly delta(const MultiPoly &p, VarName v);

/// Companion operator P(v+1) + P(v).
MultiPoly delta_star(const MultiPoly &p, VarName v);

/// Generalized binomial coefficient: upper (upper-1) ... (upper-k+1) / k!,
/// 1 for k = 0, 0 for k < 0.
MultiPoly binom_poly(const MultiPoly &upper, long k);

using Assignment = std::map<std::string, Rational>;

/// Exact evaluation. Throws std::invalid_argument naming the first
/// variable of p missing from the assignment.
Rational eval(const MultiPoly &p, const Assignment &assignment);

/// Univariate composition sum_j coeffs[j] * arg^j (Horner).
MultiPoly compose(const std::vector<Rational> &coeffs, const MultiPoly &arg);

} // namespace symid
