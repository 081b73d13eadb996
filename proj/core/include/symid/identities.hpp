#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "symid/multi_poly.hpp"
#include "symid/polyfam.hpp"

namespace symid
{

/// Both sides of one identity instance plus the number of summands each
/// builder accumulated before any cancellation.
struct Sides {
    MultiPoly lhs;
    MultiPoly rhs;
    std::size_t lhs_summands = 0;
    std::size_t rhs_summands = 0;

    MultiPoly residual() const { return lhs - rhs; }
};

/// Prefactor of the Euler-number side of the x = 1/2 specialization.
/// `consistent` uses (-1)^(n+1), which is what the specialization of the
/// Euler-polynomial identity produces; `literal` uses (-1)^n and is kept so
/// the discrepancy stays testable.
enum class Cor11Prefactor { consistent, literal };

struct BuildOptions {
    /// Worker threads for the sum over compositions; 0 or 1 runs inline.
    unsigned workers = 1;
    /// Negative control: flips the sign of the i = 1 term in the
    /// Euler-polynomial builder so that verification must fail.
    bool inject_sign_flip = false;
    Cor11Prefactor cor11_prefactor = Cor11Prefactor::consistent;
};

/// Sum over weak compositions of n into m parts of prod_j r_j^(k_j) E_(k_j)(x_j)
/// and its reflected counterpart; odd m gives the Euler-only relation, even
/// m the mixed Bernoulli/Euler one. Variables x_1..x_m, r_1..r_m; r_0 is
/// eliminated as (n - 1) - (r_1 + ... + r_m). Requires m, n >= 1.
Sides thm12_sides(unsigned m, unsigned n, const BuildOptions &opts = {});

/// The x_j = 1/2 specialization in Euler numbers and scaled Bernoulli
/// numbers, as polynomials in r_1..r_m.
Sides cor11_sides(unsigned m, unsigned n, const BuildOptions &opts = {});

/// r M(s,t,x,y) + s M(t,r,y,z) + t M(r,s,z,x) = 0 with z = 1 - x - y and
/// t = n - r - s substituted. Variables x, y, r, s.
Sides thm11_part1_sides(unsigned n);

/// Mixed Bernoulli/Euler three-parameter relation with z = 1 - x - y and
/// t = (n - 1) - r - s substituted. Variables x, y, r, s.
Sides thm11_part2_sides(unsigned n);

/// The m = 2 instance of the mixed relation after renaming x_1 := 1 - y,
/// x_2 := x, r_1 := s, r_2 := (n - 1) - r - s.
Sides remark11_transformed_sides(unsigned n);

enum class Parity { odd, even };

/// LHS and RHS of the telescoping companion-operator identity for
/// P_1..P_m in variable v. Throws std::invalid_argument for m < 2 or when
/// the parity branch does not match m.
Sides lemma21_sides(std::span<const MultiPoly> polys, Parity branch, VarName v);
MultiPoly lemma21_residual(std::span<const MultiPoly> polys, Parity branch, VarName v);
MultiPoly lemma21_residual(std::span<const MultiPoly> polys, Parity branch);

enum class Lemma22Eq { eq1, eq2 };

/// Appell-sequence convolution identities. `a` and `abar` default to fully
/// symbolic sequences a_0..a_n and abar_0..abar_n. For eq2, 2 <= i <= m.
Sides lemma22_sides(unsigned m, unsigned n, Lemma22Eq which, unsigned i = 0);
Sides lemma22_sides(unsigned m, unsigned n, Lemma22Eq which, unsigned i, const AppellSpec &a,
                    const AppellSpec &abar);

/// sum over compositions of n of prod_j C(r_j, k_j) = C(r_1 + ... + r_m, n).
Sides chu_vandermonde_sides(unsigned m, unsigned n);

// ---------------------------------------------------------------------------
// Verification driver

enum class IdentityId {
    thm11_part1,
    thm11_part2,
    thm12,
    cor11,
    lemma21,
    lemma22_eq1,
    lemma22_eq2,
    remark11,
    chu_vandermonde,
};

enum class Mode { symbolic, numeric };

std::string to_string(IdentityId id);
std::string to_string(Mode mode);
/// Throw std::invalid_argument on unknown names.
IdentityId parse_identity_id(std::string_view name);
Mode parse_mode(std::string_view name);

struct IdentitySpec {
    IdentityId id = IdentityId::thm12;
    std::optional<unsigned> m;
    unsigned n = 1;
    Mode mode = Mode::symbolic;
    /// Index i for lemma22_eq2.
    std::optional<unsigned> index;
    std::optional<Assignment> params;
    std::optional<std::uint64_t> seed;

    /// Throws std::invalid_argument when the spec violates its invariants.
    void validate() const;

    friend bool operator==(const IdentitySpec &, const IdentitySpec &) = default;
};

struct IdentityReport {
    IdentitySpec spec;
    bool holds = false;
    std::size_t residual_terms = 0;
    std::size_t lhs_terms = 0;
    std::size_t rhs_terms = 0;
    double elapsed_ms = 0.0;
    std::optional<std::string> residual_sample;

    friend bool operator==(const IdentityReport &, const IdentityReport &) = default;
};

/// Builds the sides named by `spec` and certifies them. Symbolic mode
/// checks that LHS - RHS has no terms; numeric mode compares exact values
/// at `params`, filling unassigned variables from `seed`. Every variable the
/// identity is stated in needs a value, even one that cancels out of the
/// built sides. In numeric mode the report's spec.params holds the full
/// assignment used.
/// Throws std::invalid_argument for malformed specs, or numeric specs whose
/// params are incomplete with no seed.
IdentityReport verify(const IdentitySpec &spec, const BuildOptions &opts = {});

/// Identity matrix run by the batch sweep, in enumeration order.
std::vector<IdentitySpec> verify_all_specs(unsigned max_m, unsigned max_n, std::uint64_t seed = 0);

/// Runs each spec (concurrently when jobs > 1). Output order matches input.
std::vector<IdentityReport> verify_batch(const std::vector<IdentitySpec> &specs, unsigned jobs = 1,
                                         const BuildOptions &opts = {});

} // namespace symid
