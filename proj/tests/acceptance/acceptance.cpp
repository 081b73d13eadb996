// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "oracles.hpp"

#include "symid/identities.hpp"
#include "symid/polyfam.hpp"
#include "symid/sampling.hpp"
#include "symid/sequences.hpp"

#ifdef SYMID_HAVE_CLI
#include "cli.hpp"
#endif

using namespace symid;
using Clock = std::chrono::steady_clock;

namespace
{

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string &why)
    {
        if (pass) {
            detail = why;
        }
        pass = false;
    }
};

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

/// Checks one symbolic instance for a zero residual within `limit_s` seconds.
void zero_within(Outcome &o, const std::string &label, double limit_s, const std::function<Sides()> &build,
                 double &worst)
{
    const auto t0 = Clock::now();
    const Sides s = build();
    const bool zero = s.residual().is_zero();
    const double dt = seconds_since(t0);
    worst = std::max(worst, dt);
    if (!zero) {
        o.fail(label + ": nonzero residual");
    } else if (dt >= limit_s) {
        o.fail(label + ": took " + std::to_string(dt) + " s");
    }
}

Outcome thm12_odd()
{
    Outcome o;
    double worst = 0;
    std::vector<std::pair<unsigned, unsigned>> cases;
    for (unsigned n = 1; n <= 8; ++n) {
        cases.emplace_back(1, n);
    }
    for (unsigned n = 1; n <= 5; ++n) {
        cases.emplace_back(3, n);
    }
    for (auto [m, n] : cases) {
        zero_within(o, "m=" + std::to_string(m) + " n=" + std::to_string(n), 60.0, [=] { return thm12_sides(m, n); },
                    worst);
    }
    if (o.pass) {
        o.detail = std::to_string(cases.size()) + " instances, slowest " + std::to_string(worst) + " s";
    }
    return o;
}

Outcome thm12_even()
{
    Outcome o;
    double worst = 0;
    std::vector<std::pair<unsigned, unsigned>> cases;
    for (unsigned n = 1; n <= 6; ++n) {
        cases.emplace_back(2, n);
    }
    for (unsigned n = 1; n <= 4; ++n) {
        cases.emplace_back(4, n);
    }
    for (auto [m, n] : cases) {
        zero_within(o, "m=" + std::to_string(m) + " n=" + std::to_string(n), 120.0,
                    [=] { return thm12_sides(m, n); }, worst);
    }
    if (o.pass) {
        o.detail = std::to_string(cases.size()) + " instances, slowest " + std::to_string(worst) + " s";
    }
    return o;
}

Outcome cor11()
{
    Outcome o;
    const oracle::Families fam;
    std::mt19937_64 rng(20240611);
    std::size_t points = 0;
    for (unsigned m = 1; m <= 4; ++m) {
        for (unsigned n = 1; n <= 5; ++n) {
            const std::string label = "m=" + std::to_string(m) + " n=" + std::to_string(n);
            const Sides s = cor11_sides(m, n);
            if (!s.residual().is_zero()) {
                o.fail(label + ": nonzero residual");
                continue;
            }
            // Against the pointwise oracle of the polynomial identity at x_j = 1/2,
            // rescaled by (-1)^m 2^n.
            const Rational scale = Rational::pow(Rational(-1), m) * Rational::pow(Rational(2), n);
            for (int trial = 0; trial < 20; ++trial) {
                std::vector<Rational> x(m + 1, Rational(1, 2)), r(m + 1);
                Assignment at;
                for (unsigned j = 1; j <= m; ++j) {
                    r[j] = sample_rational(rng);
                    at[VarName::r(j).name()] = r[j];
                }
                const oracle::SidesValue v = oracle::thm12_pointwise(fam, m, n, x, r);
                if (eval(s.lhs, at) != scale * v.lhs || eval(s.rhs, at) != scale * v.rhs) {
                    o.fail(label + ": cross-oracle mismatch");
                }
                ++points;
            }
        }
    }
    if (o.pass) {
        o.detail = "20 instances, " + std::to_string(points) + " cross-oracle points";
    }
    return o;
}

Outcome by_n(unsigned max_n, const std::function<Sides(unsigned)> &build)
{
    Outcome o;
    for (unsigned n = 1; n <= max_n; ++n) {
        if (!build(n).residual().is_zero()) {
            o.fail("n=" + std::to_string(n) + ": nonzero residual");
        }
    }
    if (o.pass) {
        o.detail = "n=1.." + std::to_string(max_n);
    }
    return o;
}

Outcome remark11()
{
    Outcome o;
    for (unsigned n = 1; n <= 6; ++n) {
        const Sides t = remark11_transformed_sides(n);
        const Sides s = thm11_part2_sides(n);
        if (!(t.lhs - s.lhs).is_zero() || !(t.rhs - s.rhs).is_zero()) {
            o.fail("n=" + std::to_string(n) + ": transformed instance differs");
        }
    }
    if (o.pass) {
        o.detail = "n=1..6";
    }
    return o;
}

Outcome lemma21()
{
    Outcome o;
    const VarName x = VarName::of("x");
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<unsigned> pick_m(2, 5);
    std::size_t odd = 0, even = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const unsigned m = pick_m(rng);
        std::vector<MultiPoly> polys;
        for (unsigned j = 0; j < m; ++j) {
            polys.push_back(random_univariate(rng, x, 4, {20, 20}));
        }
        const Parity branch = m % 2 ? Parity::odd : Parity::even;
        (m % 2 ? odd : even)++;
        if (!lemma21_residual(polys, branch, x).is_zero()) {
            o.fail("tuple " + std::to_string(trial) + " (m=" + std::to_string(m) + "): nonzero residual");
        }
    }
    if (odd == 0 || even == 0) {
        o.fail("a parity branch was not exercised");
    }
    if (o.pass) {
        o.detail = "200 tuples, " + std::to_string(odd) + " odd / " + std::to_string(even) + " even";
    }
    return o;
}

Outcome lemma22()
{
    Outcome o;
    std::size_t count = 0;
    for (unsigned m = 2; m <= 3; ++m) {
        for (unsigned n = 1; n <= 4; ++n) {
            const std::string label = "m=" + std::to_string(m) + " n=" + std::to_string(n);
            if (!lemma22_sides(m, n, Lemma22Eq::eq1).residual().is_zero()) {
                o.fail(label + " eq1: nonzero residual");
            }
            ++count;
            for (unsigned i = 2; i <= m; ++i) {
                if (!lemma22_sides(m, n, Lemma22Eq::eq2, i).residual().is_zero()) {
                    o.fail(label + " eq2 i=" + std::to_string(i) + ": nonzero residual");
                }
                ++count;
            }
        }
    }
    if (o.pass) {
        o.detail = std::to_string(count) + " instances";
    }
    return o;
}

Outcome sequences()
{
    Outcome o;
    for (std::size_t n = 1; n <= 60; ++n) {
        if (bernoulli_recurrence_residual(n) != Rational(0)) {
            o.fail("B recurrence n=" + std::to_string(n));
        }
        if (euler_recurrence_residual(n) != Rational(0)) {
            o.fail("E recurrence n=" + std::to_string(n));
        }
    }
    for (std::size_t k = 3; k <= 59; k += 2) {
        if (bernoulli_number(k) != Rational(0)) {
            o.fail("B_" + std::to_string(k) + " != 0");
        }
    }
    for (std::size_t k = 0; k <= 59; ++k) {
        const Rational e = euler_number(k);
        if (!e.is_integer() || (k % 2 == 1 && e != Rational(0))) {
            o.fail("E_" + std::to_string(k));
        }
    }
    const VarName x = VarName::of("x");
    for (long k = 0; k <= 30; ++k) {
        const Rational bk = bernoulli_number(k);
        const Rational half = eval(bernoulli_poly(k, x), {{"x", Rational(1, 2)}});
        if (half != (Rational::pow(Rational(2), 1 - k) - Rational(1)) * bk) {
            o.fail("B_" + std::to_string(k) + "(1/2)");
        }
        const Rational e0 = eval(euler_poly(k, x), {{"x", Rational(0)}});
        const Rational expected =
            Rational(2) * (Rational(1) - Rational::pow(Rational(2), k + 1)) * bernoulli_number(k + 1) / Rational(k + 1);
        if (e0 != expected) {
            o.fail("E_" + std::to_string(k) + "(0)");
        }
    }
    if (o.pass) {
        o.detail = "recurrences n<=60, parity/integrality k<=59, special values k<=30";
    }
    return o;
}

Outcome operators()
{
    Outcome o;
    const VarName x = VarName::of("x");
    const MultiPoly xv = MultiPoly::variable(x);
    for (unsigned n = 0; n <= 30; ++n) {
        const MultiPoly want_b = n == 0 ? MultiPoly() : pow(xv, n - 1) * Rational(static_cast<long>(n));
        if (delta(bernoulli_poly(n, x), x) != want_b) {
            o.fail("Delta B_" + std::to_string(n));
        }
        if (delta_star(euler_poly(n, x), x) != pow(xv, n) * Rational(2)) {
            o.fail("Delta* E_" + std::to_string(n));
        }
    }
    // Delta* maps x^d to 2 x^d + lower terms: triangular with nonzero
    // diagonal on the basis, hence injective there.
    for (unsigned d = 0; d <= 12; ++d) {
        const MultiPoly img = delta_star(pow(xv, d), x);
        if (img.degree(x) != d || img.coefficient(Monomial::of(x, d)) != Rational(2)) {
            o.fail("Delta* x^" + std::to_string(d));
        }
    }
    // Direct kernel check: a generic combination sum c_d x^d with symbolic c_d
    // maps to a polynomial whose x-coefficients vanish only when every c_d does.
    MultiPoly generic;
    std::vector<VarName> cs;
    for (unsigned d = 0; d <= 12; ++d) {
        cs.push_back(VarName::of("c_" + std::to_string(d + 1)));
        generic += MultiPoly::variable(cs.back()) * pow(xv, d);
    }
    const MultiPoly img = delta_star(generic, x);
    // The coefficient of x^d is 2 c_d plus terms in c_{d'} with d' > d, so
    // back-substitution from the top degree forces every c_d = 0.
    for (int d = 12; d >= 0; --d) {
        MultiPoly coeff;
        for (const auto &[mono, c] : img.terms()) {
            if (mono.degree(x) == static_cast<std::uint32_t>(d)) {
                coeff.add_term(mono.split(x).first, c);
            }
        }
        if (coeff.coefficient(Monomial::of(cs[d], 1)) != Rational(2)) {
            o.fail("kernel: pivot at degree " + std::to_string(d));
        }
        for (const VarName v : coeff.variables()) {
            const auto it = std::find(cs.begin(), cs.end(), v);
            if (it == cs.end() || it - cs.begin() < d) {
                o.fail("kernel: coefficient of x^" + std::to_string(d) + " is not upper triangular");
            }
        }
    }
    if (o.pass) {
        o.detail = "n<=30, kernel trivial up to degree 12";
    }
    return o;
}

Outcome appell_convolution()
{
    Outcome o;
    const AppellSpec spec = AppellSpec::symbolic("a", 10);
    const MultiPoly X = MultiPoly::variable(VarName::of("X")), Y = MultiPoly::variable(VarName::of("Y"));
    for (std::size_t k = 0; k <= 10; ++k) {
        MultiPoly rhs;
        for (std::size_t l = 0; l <= k; ++l) {
            rhs += pow(X, static_cast<unsigned>(k - l)) * appell_poly(spec, l, Y)
                   * Rational(binom_int(Integer(static_cast<long>(k)), static_cast<long>(l)));
        }
        if (appell_poly(spec, k, X + Y) != rhs) {
            o.fail("translation k=" + std::to_string(k));
        }
    }
    for (long n = 0; n <= 8; ++n) {
        MultiPoly sum;
        for (long k = 0; k <= n; ++k) {
            sum += binom_poly(X, k) * binom_poly(Y, n - k);
        }
        if (sum != binom_poly(X + Y, n)) {
            o.fail("Chu-Vandermonde n=" + std::to_string(n));
        }
    }
    for (unsigned m = 2; m <= 3; ++m) {
        for (unsigned n = 1; n <= 8; ++n) {
            if (!chu_vandermonde_sides(m, n).residual().is_zero()) {
                o.fail("m-fold Chu-Vandermonde m=" + std::to_string(m) + " n=" + std::to_string(n));
            }
        }
    }
    for (long k = 0; k <= 8; ++k) {
        const Rational sign = k % 2 ? Rational(-1) : Rational(1);
        if (binom_poly(-X, k) != binom_poly(X + MultiPoly(k - 1), k) * sign) {
            o.fail("upper negation k=" + std::to_string(k));
        }
    }
    if (o.pass) {
        o.detail = "translation k<=10, Chu-Vandermonde n<=8, upper negation k<=8";
    }
    return o;
}

#ifdef SYMID_HAVE_CLI
int run_cli(const std::vector<std::string> &args, std::string &out)
{
    std::ostringstream os, es;
    const int code = cli::run(args, os, es);
    out = os.str();
    return code;
}
#endif

Outcome negative_control()
{
    Outcome o;
    BuildOptions bad;
    bad.inject_sign_flip = true;
    IdentitySpec spec;
    spec.id = IdentityId::thm12;
    spec.m = 3;
    spec.n = 3;
    const IdentityReport r = verify(spec, bad);
    if (r.holds || r.residual_terms == 0) {
        o.fail("perturbed builder was certified");
    }
#ifdef SYMID_HAVE_CLI
    std::string out;
    const int code = run_cli({"verify", "--identity", "thm12", "--m", "3", "--n", "3", "--inject-sign-flip"}, out);
    if (code != cli::exit_failed) {
        o.fail("CLI exit code " + std::to_string(code) + ", expected 1");
    }
#else
    o.fail("CLI not built");
#endif
    if (o.pass) {
        o.detail = "holds=false, residual_terms=" + std::to_string(r.residual_terms) + ", CLI exit 1";
    }
    return o;
}

Outcome end_to_end()
{
    Outcome o;
#ifdef SYMID_HAVE_CLI
    using json = nlohmann::json;
    const auto t0 = Clock::now();
    std::string out;
    const int code = run_cli({"verify-all", "--max-m", "3", "--max-n", "3", "--format", "json"}, out);
    const double dt = seconds_since(t0);
    if (code != cli::exit_ok) {
        o.fail("exit code " + std::to_string(code));
    }
    if (dt >= 300.0) {
        o.fail("took " + std::to_string(dt) + " s");
    }
    json doc;
    try {
        doc = json::parse(out);
    } catch (const std::exception &e) {
        o.fail(std::string("output is not JSON: ") + e.what());
        return o;
    }
    if (!doc.is_array() || doc.size() != verify_all_specs(3, 3).size()) {
        o.fail("report array has the wrong length");
        return o;
    }
    for (const auto &r : doc) {
        const bool ok = r.is_object() && r.contains("identity") && r["identity"].is_string()
                        && r.contains("m") && (r["m"].is_null() || r["m"].is_number_integer())
                        && r.contains("n") && r["n"].is_number_integer() && r.contains("mode")
                        && r["mode"].is_string() && r.contains("holds") && r["holds"].is_boolean()
                        && r.contains("lhs_terms") && r["lhs_terms"].is_number_integer()
                        && r.contains("rhs_terms") && r["rhs_terms"].is_number_integer()
                        && r.contains("residual_terms") && r["residual_terms"].is_number_integer()
                        && r.contains("elapsed_ms") && r["elapsed_ms"].is_number() && r.contains("params")
                        && (r["params"].is_null() || r["params"].is_object());
        if (!ok) {
            o.fail("report violates the schema: " + r.dump());
            break;
        }
        if (!r["holds"].get<bool>() || r["residual_terms"].get<long>() != 0) {
            o.fail("identity failed: " + r.dump());
            break;
        }
    }
    if (o.pass) {
        o.detail = std::to_string(doc.size()) + " reports in " + std::to_string(dt) + " s";
    }
#else
    o.fail("CLI not built");
#endif
    return o;
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"1  odd-m Euler polynomial relation", thm12_odd},
        {"2  even-m mixed relation", thm12_even},
        {"3  x=1/2 specialization + cross-oracle", cor11},
        {"4  three-term Bernoulli relation", [] { return by_n(8, thm11_part1_sides); }},
        {"5  three-parameter mixed relation", [] { return by_n(6, thm11_part2_sides); }},
        {"6  m=2 equivalence with the three-parameter form", remark11},
        {"7  companion-operator telescoping lemma", lemma21},
        {"8  Appell convolution lemma", lemma22},
        {"9  sequence suite", sequences},
        {"10 operator suite", operators},
        {"11 Appell/convolution suite", appell_convolution},
        {"12 negative control", negative_control},
        {"13 end-to-end verify-all", end_to_end},
    };
    int failed = 0;
    for (const auto &[name, check] : criteria) {
        const auto t0 = Clock::now();
        Outcome o;
        try {
            o = check();
        } catch (const std::exception &e) {
            o.fail(std::string("exception: ") + e.what());
        }
        std::printf("%s criterion %-50s %.2fs  %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), seconds_since(t0),
                    o.detail.c_str());
        std::fflush(stdout);
        failed += o.pass ? 0 : 1;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
