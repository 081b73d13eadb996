#include "symid/sequences.hpp"

#include <mutex>
#include <stdexcept>

namespace symid
{

SequenceTable::SequenceTable(SequenceKind kind) : m_kind(kind), m_values{Rational(1)} {}

Rational SequenceTable::at(std::size_t k)
{
    {
        std::shared_lock lock(m_mutex);
        if (k < m_values.size()) {
            return m_values[k];
        }
    }
    std::unique_lock lock(m_mutex);
    extend_locked(k);
    return m_values[k];
}

std::size_t SequenceTable::high_water() const
{
    std::shared_lock lock(m_mutex);
    return m_values.size() - 1;
}

std::vector<Rational> SequenceTable::values(std::size_t upto)
{
    std::unique_lock lock(m_mutex);
    extend_locked(upto);
    return {m_values.begin(), m_values.begin() + static_cast<std::ptrdiff_t>(upto + 1)};
}

void SequenceTable::extend_locked(std::size_t upto)
{
    if (upto < m_values.size()) {
        return;
    }
    std::vector<Rational> next = m_values;
    next.reserve(upto + 1);
    for (std::size_t n = next.size(); n <= upto; ++n) {
        Rational acc;
        if (m_kind == SequenceKind::bernoulli) {
            // sum_{k=0}^{n} C(n+1,k) B_k = 0, solved for B_n.
            for (std::size_t k = 0; k < n; ++k) {
                acc += Rational(binom_int(Integer(static_cast<unsigned long>(n + 1)), static_cast<long>(k))) * next[k];
            }
            next.push_back(-acc / Rational(static_cast<long>(n + 1)));
        } else {
            // sum_{k<=n, n-k even} C(n,k) E_k = 0; the k = n term has coefficient 1.
            for (std::size_t k = n % 2; k < n; k += 2) {
                acc += Rational(binom_int(Integer(static_cast<unsigned long>(n)), static_cast<long>(k))) * next[k];
            }
            next.push_back(-acc);
        }
    }
    m_values = std::move(next);
}

SequenceTable &bernoulli_table()
{
    static SequenceTable table(SequenceKind::bernoulli);
    return table;
}

SequenceTable &euler_table()
{
    static SequenceTable table(SequenceKind::euler);
    return table;
}

Rational bernoulli_number(std::size_t k)
{
    return bernoulli_table().at(k);
}

Rational euler_number(std::size_t k)
{
    return euler_table().at(k);
}

Rational b_tilde(std::size_t k)
{
    if (k == 0) {
        throw std::invalid_argument("b_tilde: index must be at least 1");
    }
    const Integer p = Integer::pow(Integer(2), k);
    return Rational(p * (p - Integer(1))) * bernoulli_number(k) / Rational(static_cast<long>(k));
}

Rational euler_at_zero(std::size_t k)
{
    const Integer p = Integer::pow(Integer(2), k + 1);
    return Rational(2) * Rational(Integer(1) - p) * bernoulli_number(k + 1) / Rational(static_cast<long>(k + 1));
}

Rational bernoulli_recurrence_residual(std::size_t n)
{
    Rational acc;
    for (std::size_t k = 0; k <= n; ++k) {
        acc += Rational(binom_int(Integer(static_cast<unsigned long>(n + 1)), static_cast<long>(k))) * bernoulli_number(k);
    }
    return acc;
}

Rational euler_recurrence_residual(std::size_t n)
{
    Rational acc;
    for (std::size_t k = n % 2; k <= n; k += 2) {
        acc += Rational(binom_int(Integer(static_cast<unsigned long>(n)), static_cast<long>(k))) * euler_number(k);
    }
    return acc;
}

} // namespace symid
