#pragma once

#include <cstddef>
#include <shared_mutex>
#include <vector>

#include "symid/rational.hpp"

namespace symid
{

enum class SequenceKind { bernoulli, euler };

/// Cached exact values of one number sequence, produced by its defining
/// recurrence. The table only grows. Extension happens in one batch under an
/// exclusive lock, so concurrent readers never observe a partially filled
/// table.
class SequenceTable
{
public:
    explicit SequenceTable(SequenceKind kind);

    SequenceKind kind() const { return m_kind; }

    /// Value at index k, extending the table through k if needed.
    Rational at(std::size_t k);

    /// Largest index currently stored.
    std::size_t high_water() const;

    /// Snapshot of values 0..upto (extends first).
    std::vector<Rational> values(std::size_t upto);

private:
    void extend_locked(std::size_t upto);

    SequenceKind m_kind;
    mutable std::shared_mutex m_mutex;
    std::vector<Rational> m_values;
};

/// Process-wide tables backing the free functions below.
SequenceTable &bernoulli_table();
SequenceTable &euler_table();

/// B_k with B_1 = -1/2.
Rational bernoulli_number(std::size_t k);

/// E_k, the integer Euler numbers (E_2 = -1, E_4 = 5).
Rational euler_number(std::size_t k);

/// 2^k (2^k - 1) B_k / k. Throws std::invalid_argument for k = 0.
Rational b_tilde(std::size_t k);

/// E_k(0) = 2 (1 - 2^{k+1}) B_{k+1} / (k + 1), computed from Bernoulli numbers.
Rational euler_at_zero(std::size_t k);

/// Sum in the Bernoulli recurrence for n >= 1: sum_{k=0}^{n} C(n+1, k) B_k.
Rational bernoulli_recurrence_residual(std::size_t n);

/// Sum in the Euler recurrence for n >= 1: sum over k <= n with n - k even of C(n, k) E_k.
Rational euler_recurrence_residual(std::size_t n);

} // namespace symid
