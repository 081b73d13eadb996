#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "symid/multi_poly.hpp"
#include "symid/rational.hpp"
#include "symid/var_name.hpp"

namespace symid
{

/// Monomial-basis coefficients of B_n(x), index = power of x.
const std::vector<Rational> &bernoulli_coefficients(std::size_t n);

/// Monomial-basis coefficients of E_n(x), expanded from the form centred at
/// x = 1/2.
const std::vector<Rational> &euler_coefficients(std::size_t n);

MultiPoly bernoulli_poly(std::size_t n, VarName v);
MultiPoly euler_poly(std::size_t n, VarName v);

/// B_n composed with an arbitrary argument, e.g. B_k(1 - x_i).
MultiPoly bernoulli_poly_shifted(std::size_t n, const MultiPoly &arg);

/// E_n composed with an arbitrary argument, e.g. E_k(x_j - x_i + 1).
MultiPoly euler_poly_shifted(std::size_t n, const MultiPoly &arg);

/// One entry a_l of an Appell-type coefficient sequence: a number, or an
/// indeterminate for symbolic mode.
using AppellCoeff = std::variant<Rational, VarName>;

struct AppellSpec {
    std::vector<AppellCoeff> coeffs;

    /// a_l = `family`_l for l = 0..n, e.g. family "a" gives a_0..a_n.
    static AppellSpec symbolic(const std::string &family, std::size_t n);
    static AppellSpec numeric(std::vector<Rational> values);

    /// a_l = (-1)^l B_l, whose Appell polynomials are B_k.
    static AppellSpec bernoulli(std::size_t n);
    /// a_l = (-1)^l E_l(0), whose Appell polynomials are E_k.
    static AppellSpec euler(std::size_t n);
};

/// A_k(arg) = sum_{l=0}^{k} C(k, l) (-1)^l a_l arg^{k-l}.
/// Throws std::out_of_range when k exceeds the spec's last index.
MultiPoly appell_poly(const AppellSpec &spec, std::size_t k, const MultiPoly &arg);
MultiPoly appell_poly(const AppellSpec &spec, std::size_t k, VarName v);

} // namespace symid
