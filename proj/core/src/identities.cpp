#include "symid/identities.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <future>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

#include "symid/composition.hpp"
#include "symid/sampling.hpp"
#include "symid/sequences.hpp"

namespace symid
{
namespace
{

MultiPoly var(VarName v)
{
    return MultiPoly::variable(v);
}

MultiPoly var(std::string_view name)
{
    return MultiPoly::variable(VarName::of(name));
}

Rational sign_pow(long e)
{
    return (e % 2 == 0) ? Rational(1) : Rational(-1);
}

/// (n - 1) - (r_1 + ... + r_m): the eliminated r_0.
MultiPoly eliminated_r0(unsigned m, unsigned n)
{
    MultiPoly r0(static_cast<long>(n) - 1);
    for (unsigned j = 1; j <= m; ++j) {
        r0 -= var(VarName::r(j));
    }
    return r0;
}

/// Sum of `summand(c)` over the weak compositions of n into m parts, split
/// across `workers` threads. `summand` must only read shared state.
template <typename F>
MultiPoly sum_over_compositions(unsigned n, unsigned m, unsigned workers, F &&summand)
{
    const std::vector<Composition> comps = composition_list(n, m);
    if (workers <= 1 || comps.size() < 2 * static_cast<std::size_t>(workers)) {
        MultiPoly acc;
        for (const auto &c : comps) {
            acc += summand(c);
        }
        return acc;
    }
    std::vector<std::future<MultiPoly>> parts;
    const std::size_t chunk = (comps.size() + workers - 1) / workers;
    for (std::size_t begin = 0; begin < comps.size(); begin += chunk) {
        const std::size_t end = std::min(comps.size(), begin + chunk);
        parts.push_back(std::async(std::launch::async, [&, begin, end] {
            MultiPoly acc;
            for (std::size_t i = begin; i < end; ++i) {
                acc += summand(comps[i]);
            }
            return acc;
        }));
    }
    MultiPoly total;
    for (auto &p : parts) {
        total += p.get();
    }
    return total;
}

std::size_t composition_count(unsigned n, unsigned m)
{
    return static_cast<std::size_t>(
        binom_int(Integer(static_cast<unsigned long>(n + m - 1)), static_cast<long>(m - 1)).to_long());
}

/// Table indexed [j][k] for j = 1..m (slot 0 unused), k = 0..n.
using Table = std::vector<std::vector<MultiPoly>>;

Table binom_r_table(unsigned m, unsigned n)
{
    Table t(m + 1);
    for (unsigned j = 1; j <= m; ++j) {
        for (unsigned k = 0; k <= n; ++k) {
            t[j].push_back(binom_poly(var(VarName::r(j)), k));
        }
    }
    return t;
}

std::vector<MultiPoly> binom_table(const MultiPoly &upper, unsigned n)
{
    std::vector<MultiPoly> t;
    for (unsigned k = 0; k <= n; ++k) {
        t.push_back(binom_poly(upper, k));
    }
    return t;
}

void require(bool ok, const std::string &message)
{
    if (!ok) {
        throw std::invalid_argument(message);
    }
}

} // namespace

// ---------------------------------------------------------------------------
// Euler-polynomial relation and its mixed even-m counterpart

Sides thm12_sides(unsigned m, unsigned n, const BuildOptions &opts)
{
    require(m >= 1 && n >= 1, "thm12 requires m >= 1 and n >= 1");
    const bool odd = (m % 2) == 1;
    const Table binom_r = binom_r_table(m, n);
    const std::vector<MultiPoly> binom_r0 = binom_table(eliminated_r0(m, n), n);

    // plain[j][k] = C(r_j, k) E_k(x_j)
    Table plain(m + 1);
    for (unsigned j = 1; j <= m; ++j) {
        for (unsigned k = 0; k <= n; ++k) {
            plain[j].push_back(binom_r[j][k] * euler_poly(k, VarName::x(j)));
        }
    }
    // lead[i][k] = C(r_0, k) E_k(1 - x_i)  (odd)  or  C(r_0, k) B_k(1 - x_i)  (even)
    Table lead(m + 1);
    // cross[i][j][k] = C(r_j, k) E_k(x_j - x_i + [j > i])
    std::vector<Table> cross(m + 1, Table(m + 1));
    for (unsigned i = 1; i <= m; ++i) {
        const MultiPoly reflected = MultiPoly(1) - var(VarName::x(i));
        for (unsigned k = 0; k <= n; ++k) {
            lead[i].push_back(binom_r0[k]
                              * (odd ? euler_poly_shifted(k, reflected) : bernoulli_poly_shifted(k, reflected)));
        }
        for (unsigned j = 1; j <= m; ++j) {
            if (j == i) {
                continue;
            }
            const MultiPoly arg = var(VarName::x(j)) - var(VarName::x(i)) + MultiPoly(j > i ? 1 : 0);
            for (unsigned k = 0; k <= n; ++k) {
                cross[i][j].push_back(binom_r[j][k] * euler_poly_shifted(k, arg));
            }
        }
    }

    Sides s;
    const unsigned lhs_total = odd ? n : n - 1;
    s.lhs = sum_over_compositions(lhs_total, m, opts.workers, [&](const Composition &c) {
        MultiPoly prod(1);
        for (unsigned j = 1; j <= m; ++j) {
            prod *= plain[j][c[j - 1]];
        }
        return prod;
    });
    s.lhs_summands = composition_count(lhs_total, m);
    if (!odd) {
        s.lhs *= eliminated_r0(m, n) * Rational(1, 2);
    }

    for (unsigned i = 1; i <= m; ++i) {
        MultiPoly inner = sum_over_compositions(n, m, opts.workers, [&](const Composition &c) {
            MultiPoly prod = lead[i][c[i - 1]];
            for (unsigned j = 1; j <= m; ++j) {
                if (j != i) {
                    prod *= cross[i][j][c[j - 1]];
                }
            }
            return prod;
        });
        Rational sign = sign_pow(i);
        if (odd) {
            sign = -sign;
        }
        if (opts.inject_sign_flip && i == 1) {
            sign = -sign;
        }
        s.rhs += inner * sign;
    }
    s.rhs_summands = composition_count(n, m) * m;
    return s;
}

// ---------------------------------------------------------------------------
// x_j = 1/2 specialization

Sides cor11_sides(unsigned m, unsigned n, const BuildOptions &opts)
{
    require(m >= 1 && n >= 1, "cor11 requires m >= 1 and n >= 1");
    const bool odd = (m % 2) == 1;
    const Table binom_r = binom_r_table(m, n);
    const MultiPoly r0 = eliminated_r0(m, n);
    const std::vector<MultiPoly> binom_r0 = binom_table(r0, n);

    Sides s;
    const unsigned lhs_total = odd ? n : n - 1;
    s.lhs = sum_over_compositions(lhs_total, m, opts.workers, [&](const Composition &c) {
        MultiPoly prod(1);
        for (unsigned j = 1; j <= m; ++j) {
            const Rational e = euler_number(c[j - 1]);
            if (e.is_zero()) {
                return MultiPoly();
            }
            prod *= binom_r[j][c[j - 1]] * e;
        }
        return prod;
    });
    s.lhs_summands = composition_count(lhs_total, m);
    const long prefactor_exp = opts.cor11_prefactor == Cor11Prefactor::literal ? n : n + 1;
    s.lhs *= sign_pow(prefactor_exp);
    if (!odd) {
        s.lhs *= r0;
    }

    for (unsigned i = 1; i <= m; ++i) {
        MultiPoly inner = sum_over_compositions(n, m, opts.workers, [&](const Composition &c) {
            const unsigned ki = c[i - 1];
            Rational scalar;
            if (odd) {
                scalar = euler_number(ki);
            } else {
                scalar = Rational(Integer::pow(Integer(2), ki) - Integer(2)) * bernoulli_number(ki);
            }
            unsigned later_positive = 0;
            for (unsigned j = 1; j <= m; ++j) {
                if (j == i) {
                    continue;
                }
                scalar *= b_tilde(c[j - 1] + 1);
                if (j > i && c[j - 1] > 0) {
                    ++later_positive;
                }
            }
            if (scalar.is_zero()) {
                return MultiPoly();
            }
            MultiPoly prod = binom_r0[ki] * (scalar * sign_pow(later_positive));
            for (unsigned j = 1; j <= m; ++j) {
                if (j != i) {
                    prod *= binom_r[j][c[j - 1]];
                }
            }
            return prod;
        });
        s.rhs += inner * sign_pow(i);
    }
    s.rhs_summands = composition_count(n, m) * m;
    return s;
}

// ---------------------------------------------------------------------------
// Three-parameter relations in x, y, r, s

namespace
{

/// sum_{k=0}^{n} (-1)^k C(s,k) C(t,n-k) B_{n-k}(x) B_k(y)
MultiPoly bernoulli_pair_sum(unsigned n, const MultiPoly &s, const MultiPoly &t, const MultiPoly &x,
                             const MultiPoly &y)
{
    MultiPoly acc;
    for (unsigned k = 0; k <= n; ++k) {
        acc += binom_poly(s, k) * binom_poly(t, n - k) * bernoulli_poly_shifted(n - k, x)
               * bernoulli_poly_shifted(k, y) * sign_pow(k);
    }
    return acc;
}

} // namespace

Sides thm11_part1_sides(unsigned n)
{
    require(n >= 1, "thm11_part1 requires n >= 1");
    const MultiPoly x = var("x"), y = var("y"), r = var("r"), s = var("s");
    const MultiPoly z = MultiPoly(1) - x - y;
    const MultiPoly t = MultiPoly(static_cast<long>(n)) - r - s;

    Sides out;
    out.lhs = r * bernoulli_pair_sum(n, s, t, x, y) + s * bernoulli_pair_sum(n, t, r, y, z)
              + t * bernoulli_pair_sum(n, r, s, z, x);
    out.lhs_summands = 3 * static_cast<std::size_t>(n + 1);
    return out;
}

Sides thm11_part2_sides(unsigned n)
{
    require(n >= 1, "thm11_part2 requires n >= 1");
    const MultiPoly x = var("x"), y = var("y"), r = var("r"), s = var("s");
    const MultiPoly z = MultiPoly(1) - x - y;
    const MultiPoly t = MultiPoly(static_cast<long>(n) - 1) - r - s;

    Sides out;
    for (unsigned l = 0; l + 1 <= n; ++l) {
        out.lhs += binom_poly(s, l) * binom_poly(t, n - 1 - l) * euler_poly_shifted(l, y)
                   * euler_poly_shifted(n - 1 - l, x) * sign_pow(l);
    }
    out.lhs *= r * Rational(1, 2);
    out.lhs_summands = n;

    MultiPoly first, second;
    for (unsigned k = 0; k <= n; ++k) {
        const MultiPoly ez = euler_poly_shifted(n - k, z);
        const MultiPoly br = binom_poly(r, k) * sign_pow(k);
        first += br * binom_poly(s, n - k) * bernoulli_poly_shifted(k, x) * ez;
        second += br * binom_poly(t, n - k) * bernoulli_poly_shifted(k, y) * ez;
    }
    out.rhs = first - second * sign_pow(n);
    out.rhs_summands = 2 * static_cast<std::size_t>(n + 1);
    return out;
}

Sides remark11_transformed_sides(unsigned n)
{
    require(n >= 1, "remark11 requires n >= 1");
    Sides even = thm12_sides(2, n);
    const MultiPoly x = var("x"), y = var("y"), r = var("r"), s = var("s");
    const std::vector<std::pair<VarName, MultiPoly>> renaming{
        {VarName::x(1), MultiPoly(1) - y},
        {VarName::x(2), x},
        {VarName::r(1), s},
        {VarName::r(2), MultiPoly(static_cast<long>(n) - 1) - r - s},
    };
    even.lhs = substitute(even.lhs, renaming);
    even.rhs = substitute(even.rhs, renaming);
    return even;
}

// ---------------------------------------------------------------------------
// Telescoping companion-operator identity

Sides lemma21_sides(std::span<const MultiPoly> polys, Parity branch, VarName v)
{
    const std::size_t m = polys.size();
    require(m >= 2, "lemma21 requires at least two polynomials");
    require((branch == Parity::odd) == (m % 2 == 1), "lemma21 parity branch does not match the number of polynomials");

    std::vector<MultiPoly> shifted;
    shifted.reserve(m);
    for (const auto &p : polys) {
        shifted.push_back(shift_one(p, v));
    }

    Sides s;
    // Indices below are 0-based: P_1 is polys[0].
    MultiPoly sum;
    for (std::size_t i = 1; i < m; ++i) {
        MultiPoly term = delta_star(polys[i], v);
        for (std::size_t j = 1; j < m; ++j) {
            if (j != i) {
                term *= (j < i) ? shifted[j] : polys[j];
            }
        }
        // 1-based index i + 1 determines the sign.
        sum += term * sign_pow(static_cast<long>(i + 1));
    }
    s.lhs = polys[0] * sum;
    s.lhs_summands = m - 1;

    MultiPoly product(1), tail_shifted(1);
    for (std::size_t j = 0; j < m; ++j) {
        product *= polys[j];
        if (j > 0) {
            tail_shifted *= shifted[j];
        }
    }
    const MultiPoly head = branch == Parity::odd ? delta_star(polys[0], v) : delta(polys[0], v);
    s.rhs = delta_star(product, v) - head * tail_shifted;
    s.rhs_summands = 2;
    return s;
}

MultiPoly lemma21_residual(std::span<const MultiPoly> polys, Parity branch, VarName v)
{
    return lemma21_sides(polys, branch, v).residual();
}

MultiPoly lemma21_residual(std::span<const MultiPoly> polys, Parity branch)
{
    return lemma21_residual(polys, branch, VarName::of("x"));
}

// ---------------------------------------------------------------------------
// Appell-sequence convolutions

Sides lemma22_sides(unsigned m, unsigned n, Lemma22Eq which, unsigned i)
{
    return lemma22_sides(m, n, which, i, AppellSpec::symbolic("a", n), AppellSpec::symbolic("abar", n));
}

Sides lemma22_sides(unsigned m, unsigned n, Lemma22Eq which, unsigned i, const AppellSpec &a,
                    const AppellSpec &abar)
{
    require(m >= 2 && n >= 1, "lemma22 requires m >= 2 and n >= 1");
    if (which == Lemma22Eq::eq2) {
        require(i >= 2 && i <= m, "lemma22 eq2 requires 2 <= i <= m");
    }
    const Table binom_r = binom_r_table(m, n);
    const std::vector<MultiPoly> binom_r0 = binom_table(eliminated_r0(m, n), n);
    auto x = [](unsigned j) { return var(VarName::x(j)); };

    // powers of a fixed polynomial, k = 0..n
    auto powers_of = [n](const MultiPoly &base) {
        std::vector<MultiPoly> p{MultiPoly(1)};
        for (unsigned k = 1; k <= n; ++k) {
            p.push_back(p.back() * base);
        }
        return p;
    };
    // A_k(arg) for k = 0..n
    auto appell_row = [n](const AppellSpec &spec, const MultiPoly &arg) {
        std::vector<MultiPoly> row;
        for (unsigned k = 0; k <= n; ++k) {
            row.push_back(appell_poly(spec, k, arg));
        }
        return row;
    };

    Sides s;
    const std::size_t count = composition_count(n, m);
    s.lhs_summands = s.rhs_summands = count;

    if (which == Lemma22Eq::eq1) {
        const auto neg_x1 = powers_of(-x(1));
        const auto pos_x1 = powers_of(x(1));
        Table shifted(m + 1), plain(m + 1);
        for (unsigned j = 2; j <= m; ++j) {
            shifted[j] = appell_row(a, x(j) - x(1));
            plain[j] = appell_row(a, x(j));
        }
        s.lhs = sum_over_compositions(n, m, 1, [&](const Composition &c) {
            MultiPoly prod = binom_r0[c[0]] * neg_x1[c[0]];
            for (unsigned j = 2; j <= m; ++j) {
                prod *= binom_r[j][c[j - 1]] * shifted[j][c[j - 1]];
            }
            return prod;
        });
        s.rhs = sum_over_compositions(n, m, 1, [&](const Composition &c) {
            MultiPoly prod = binom_r[1][c[0]] * pos_x1[c[0]];
            for (unsigned j = 2; j <= m; ++j) {
                prod *= binom_r[j][c[j - 1]] * plain[j][c[j - 1]];
            }
            return prod;
        });
        return s;
    }

    const auto lead_lhs = appell_row(a, -x(1));
    const auto lead_rhs = appell_row(a, -x(i));
    const auto gap_lhs = powers_of(x(i) - x(1));
    const auto gap_rhs = powers_of(x(1) - x(i));
    Table bar_lhs(m + 1), bar_rhs(m + 1);
    for (unsigned j = 2; j <= m; ++j) {
        if (j != i) {
            bar_lhs[j] = appell_row(abar, x(j) - x(1));
            bar_rhs[j] = appell_row(abar, x(j) - x(i));
        }
    }
    s.lhs = sum_over_compositions(n, m, 1, [&](const Composition &c) {
        MultiPoly prod = binom_r0[c[0]] * lead_lhs[c[0]] * binom_r[i][c[i - 1]] * gap_lhs[c[i - 1]];
        for (unsigned j = 2; j <= m; ++j) {
            if (j != i) {
                prod *= binom_r[j][c[j - 1]] * bar_lhs[j][c[j - 1]];
            }
        }
        return prod;
    });
    s.rhs = sum_over_compositions(n, m, 1, [&](const Composition &c) {
        MultiPoly prod = binom_r[1][c[0]] * gap_rhs[c[0]] * binom_r0[c[i - 1]] * lead_rhs[c[i - 1]];
        for (unsigned j = 2; j <= m; ++j) {
            if (j != i) {
                prod *= binom_r[j][c[j - 1]] * bar_rhs[j][c[j - 1]];
            }
        }
        return prod;
    });
    return s;
}

Sides chu_vandermonde_sides(unsigned m, unsigned n)
{
    require(m >= 2, "chu_vandermonde requires m >= 2");
    const Table binom_r = binom_r_table(m, n);
    Sides s;
    s.lhs = sum_over_compositions(n, m, 1, [&](const Composition &c) {
        MultiPoly prod(1);
        for (unsigned j = 1; j <= m; ++j) {
            prod *= binom_r[j][c[j - 1]];
        }
        return prod;
    });
    s.lhs_summands = composition_count(n, m);
    MultiPoly total;
    for (unsigned j = 1; j <= m; ++j) {
        total += var(VarName::r(j));
    }
    s.rhs = binom_poly(total, n);
    s.rhs_summands = 1;
    return s;
}

// ---------------------------------------------------------------------------
// Verification driver

namespace
{

struct NamedId {
    IdentityId id;
    const char *name;
};

constexpr NamedId k_identity_names[] = {
    {IdentityId::thm11_part1, "thm11_part1"}, {IdentityId::thm11_part2, "thm11_part2"},
    {IdentityId::thm12, "thm12"},             {IdentityId::cor11, "cor11"},
    {IdentityId::lemma21, "lemma21"},         {IdentityId::lemma22_eq1, "lemma22_eq1"},
    {IdentityId::lemma22_eq2, "lemma22_eq2"}, {IdentityId::remark11, "remark11"},
    {IdentityId::chu_vandermonde, "chu_vandermonde"},
};

} // namespace

std::string to_string(IdentityId id)
{
    for (const auto &e : k_identity_names) {
        if (e.id == id) {
            return e.name;
        }
    }
    throw std::invalid_argument("unknown identity id");
}

std::string to_string(Mode mode)
{
    return mode == Mode::symbolic ? "symbolic" : "numeric";
}

IdentityId parse_identity_id(std::string_view name)
{
    for (const auto &e : k_identity_names) {
        if (name == e.name) {
            return e.id;
        }
    }
    throw std::invalid_argument("unknown identity '" + std::string(name) + "'");
}

Mode parse_mode(std::string_view name)
{
    if (name == "symbolic") {
        return Mode::symbolic;
    }
    if (name == "numeric") {
        return Mode::numeric;
    }
    throw std::invalid_argument("unknown mode '" + std::string(name) + "'");
}

void IdentitySpec::validate() const
{
    const std::string id_name = to_string(id);
    require(n >= 1, id_name + " requires n >= 1");
    switch (id) {
    case IdentityId::thm11_part1:
    case IdentityId::thm11_part2:
    case IdentityId::remark11:
        require(!m.has_value(), id_name + " takes no m");
        break;
    case IdentityId::thm12:
    case IdentityId::cor11:
        require(m.has_value() && *m >= 1, id_name + " requires m >= 1");
        break;
    case IdentityId::lemma21:
    case IdentityId::lemma22_eq1:
    case IdentityId::chu_vandermonde:
        require(m.has_value() && *m >= 2, id_name + " requires m >= 2");
        break;
    case IdentityId::lemma22_eq2:
        require(m.has_value() && *m >= 2, id_name + " requires m >= 2");
        require(index.has_value() && *index >= 2 && *index <= *m, id_name + " requires an index i with 2 <= i <= m");
        break;
    }
    if (id != IdentityId::lemma22_eq2) {
        require(!index.has_value(), id_name + " takes no index i");
    }
}

namespace
{

/// Sides to compare. Most identities yield one pair; remark11 compares
/// the transformed LHS and RHS against the three-parameter statement
/// separately.
struct Comparison {
    std::vector<std::pair<MultiPoly, MultiPoly>> pairs;
    std::size_t lhs_terms = 0;
    std::size_t rhs_terms = 0;
};

Comparison build_comparison(const IdentitySpec &spec, const BuildOptions &opts)
{
    auto single = [](Sides s) {
        Comparison c;
        c.lhs_terms = s.lhs.size();
        c.rhs_terms = s.rhs.size();
        c.pairs.emplace_back(std::move(s.lhs), std::move(s.rhs));
        return c;
    };
    const unsigned m = spec.m.value_or(0);
    switch (spec.id) {
    case IdentityId::thm12:
        return single(thm12_sides(m, spec.n, opts));
    case IdentityId::cor11:
        return single(cor11_sides(m, spec.n, opts));
    case IdentityId::thm11_part1:
        return single(thm11_part1_sides(spec.n));
    case IdentityId::thm11_part2:
        return single(thm11_part2_sides(spec.n));
    case IdentityId::lemma22_eq1:
        return single(lemma22_sides(m, spec.n, Lemma22Eq::eq1));
    case IdentityId::lemma22_eq2:
        return single(lemma22_sides(m, spec.n, Lemma22Eq::eq2, spec.index.value_or(0)));
    case IdentityId::chu_vandermonde:
        return single(chu_vandermonde_sides(m, spec.n));
    case IdentityId::lemma21: {
        std::mt19937_64 rng(spec.seed.value_or(0));
        const VarName x = VarName::of("x");
        std::vector<MultiPoly> polys;
        for (unsigned j = 0; j < m; ++j) {
            polys.push_back(random_univariate(rng, x, spec.n));
        }
        return single(lemma21_sides(polys, m % 2 ? Parity::odd : Parity::even, x));
    }
    case IdentityId::remark11: {
        Sides transformed = remark11_transformed_sides(spec.n);
        Sides statement = thm11_part2_sides(spec.n);
        Comparison c;
        c.lhs_terms = transformed.lhs.size();
        c.rhs_terms = transformed.rhs.size();
        c.pairs.emplace_back(std::move(transformed.lhs), std::move(statement.lhs));
        c.pairs.emplace_back(std::move(transformed.rhs), std::move(statement.rhs));
        return c;
    }
    }
    throw std::invalid_argument("unknown identity id");
}

/// Free variables an identity is stated in, whether or not they survive in
/// the built sides (e.g. both sides of some instances vanish identically).
std::vector<VarName> declared_variables(const IdentitySpec &spec)
{
    const unsigned m = spec.m.value_or(0);
    std::vector<VarName> vars;
    auto xs_and_rs = [&](bool with_x) {
        for (unsigned j = 1; j <= m; ++j) {
            if (with_x) {
                vars.push_back(VarName::x(j));
            }
            vars.push_back(VarName::r(j));
        }
    };
    switch (spec.id) {
    case IdentityId::thm12:
        xs_and_rs(true);
        break;
    case IdentityId::cor11:
    case IdentityId::chu_vandermonde:
        xs_and_rs(false);
        break;
    case IdentityId::thm11_part1:
    case IdentityId::thm11_part2:
    case IdentityId::remark11:
        for (const char *name : {"x", "y", "r", "s"}) {
            vars.push_back(VarName::of(name));
        }
        break;
    case IdentityId::lemma21:
        vars.push_back(VarName::of("x"));
        break;
    case IdentityId::lemma22_eq1:
    case IdentityId::lemma22_eq2:
        xs_and_rs(true);
        for (unsigned l = 0; l <= spec.n; ++l) {
            vars.push_back(VarName::a(l));
            if (spec.id == IdentityId::lemma22_eq2) {
                vars.push_back(VarName::abar(l));
            }
        }
        break;
    }
    return vars;
}

constexpr std::size_t k_residual_sample_terms = 12;

std::string sample_of(const MultiPoly &residual)
{
    const auto terms = residual.sorted_terms();
    MultiPoly head;
    for (std::size_t i = 0; i < terms.size() && i < k_residual_sample_terms; ++i) {
        head.add_term(terms[i].first, terms[i].second);
    }
    std::string out = head.to_string();
    if (terms.size() > k_residual_sample_terms) {
        out += " + ...";
    }
    return out;
}

} // namespace

IdentityReport verify(const IdentitySpec &spec, const BuildOptions &opts)
{
    spec.validate();
    const auto start = std::chrono::steady_clock::now();

    IdentityReport report;
    report.spec = spec;
    Comparison cmp = build_comparison(spec, opts);
    report.lhs_terms = cmp.lhs_terms;
    report.rhs_terms = cmp.rhs_terms;

    if (spec.mode == Mode::symbolic) {
        MultiPoly first_nonzero;
        for (const auto &[lhs, rhs] : cmp.pairs) {
            MultiPoly residual = lhs - rhs;
            if (!residual.is_zero() && first_nonzero.is_zero()) {
                first_nonzero = residual;
            }
            report.residual_terms += residual.size();
        }
        if (!first_nonzero.is_zero()) {
            report.residual_sample = sample_of(first_nonzero);
        }
    } else {
        std::set<std::string> names;
        std::vector<VarName> ordered;
        for (auto v : declared_variables(spec)) {
            if (names.insert(v.name()).second) {
                ordered.push_back(v);
            }
        }
        for (const auto &[lhs, rhs] : cmp.pairs) {
            for (const auto *p : {&lhs, &rhs}) {
                for (auto v : p->variables()) {
                    if (names.insert(v.name()).second) {
                        ordered.push_back(v);
                    }
                }
            }
        }
        std::sort(ordered.begin(), ordered.end(), canonical_less);
        Assignment assignment = spec.params.value_or(Assignment{});
        std::optional<std::mt19937_64> rng;
        if (spec.seed) {
            rng.emplace(*spec.seed);
        }
        for (auto v : ordered) {
            if (assignment.count(v.name())) {
                continue;
            }
            if (!rng) {
                throw std::invalid_argument("numeric mode: no value for '" + v.name() + "' and no seed given");
            }
            assignment.emplace(v.name(), sample_rational(*rng));
        }
        for (const auto &[lhs, rhs] : cmp.pairs) {
            const Rational diff = eval(lhs, assignment) - eval(rhs, assignment);
            if (!diff.is_zero()) {
                ++report.residual_terms;
                if (!report.residual_sample) {
                    report.residual_sample = diff.to_string();
                }
            }
        }
        report.spec.params = std::move(assignment);
    }
    report.holds = report.residual_terms == 0;
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::vector<IdentitySpec> verify_all_specs(unsigned max_m, unsigned max_n, std::uint64_t seed)
{
    require(max_m >= 1 && max_n >= 1, "verify-all bounds must be at least 1");
    std::vector<IdentitySpec> specs;
    auto add = [&](IdentityId id, std::optional<unsigned> m, unsigned n, std::optional<unsigned> i = std::nullopt) {
        IdentitySpec s;
        s.id = id;
        s.m = m;
        s.n = n;
        s.index = i;
        specs.push_back(std::move(s));
    };
    for (unsigned m = 1; m <= max_m; ++m) {
        for (unsigned n = 1; n <= max_n; ++n) {
            add(IdentityId::thm12, m, n);
        }
    }
    for (unsigned m = 1; m <= max_m; ++m) {
        for (unsigned n = 1; n <= max_n; ++n) {
            add(IdentityId::cor11, m, n);
        }
    }
    for (unsigned n = 1; n <= max_n; ++n) {
        add(IdentityId::thm11_part1, std::nullopt, n);
        add(IdentityId::thm11_part2, std::nullopt, n);
    }
    for (unsigned n = 1; n <= max_n; ++n) {
        add(IdentityId::remark11, std::nullopt, n);
    }
    const unsigned lemma_m = std::min(max_m, 3u);
    const unsigned lemma_n = std::min(max_n, 4u);
    for (unsigned m = 2; m <= lemma_m; ++m) {
        for (unsigned n = 1; n <= lemma_n; ++n) {
            add(IdentityId::lemma22_eq1, m, n);
            for (unsigned i = 2; i <= m; ++i) {
                add(IdentityId::lemma22_eq2, m, n, i);
            }
        }
    }
    // One seeded random tuple per m in 2..max(2, max_m), degree <= 4.
    for (unsigned m = 2; m <= std::max(2u, max_m); ++m) {
        IdentitySpec s;
        s.id = IdentityId::lemma21;
        s.m = m;
        s.n = 4;
        s.seed = seed + m;
        specs.push_back(std::move(s));
    }
    return specs;
}

std::vector<IdentityReport> verify_batch(const std::vector<IdentitySpec> &specs, unsigned jobs,
                                         const BuildOptions &opts)
{
    std::vector<IdentityReport> reports(specs.size());
    if (jobs <= 1) {
        for (std::size_t i = 0; i < specs.size(); ++i) {
            reports[i] = verify(specs[i], opts);
        }
        return reports;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(specs.size());
    auto worker = [&] {
        for (std::size_t i = next++; i < specs.size(); i = next++) {
            try {
                reports[i] = verify(specs[i], opts);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t) {
        pool.emplace_back(worker);
    }
    pool.clear();
    for (auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    return reports;
}

} // namespace symid
