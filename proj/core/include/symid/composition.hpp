#pragma once

#include <cstddef>
#include <iterator>
#include <vector>

namespace symid
{

/// A weak composition (k_1, ..., k_m) of `target`.
struct Composition {
    std::vector<unsigned> parts;
    unsigned target = 0;

    std::size_t size() const { return parts.size(); }
    unsigned operator[](std::size_t i) const { return parts[i]; }
    friend bool operator==(const Composition &, const Composition &) = default;
};

/// Lazily enumerates the weak compositions of n into m parts in
/// lexicographic order, from (0, ..., 0, n) to (n, 0, ..., 0).
class CompositionRange
{
public:
    class iterator
    {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = Composition;
        using difference_type = std::ptrdiff_t;
        using pointer = const Composition *;
        using reference = const Composition &;

        iterator() = default;
        reference operator*() const { return m_current; }
        pointer operator->() const { return &m_current; }
        iterator &operator++();
        iterator operator++(int)
        {
            auto copy = *this;
            ++*this;
            return copy;
        }
        friend bool operator==(const iterator &a, const iterator &b) { return a.m_done == b.m_done && (a.m_done || a.m_current == b.m_current); }

    private:
        friend class CompositionRange;
        iterator(unsigned n, unsigned m);

        Composition m_current;
        bool m_done = true;
    };

    /// Throws std::invalid_argument when m == 0.
    CompositionRange(unsigned n, unsigned m);

    iterator begin() const { return iterator(m_n, m_m); }
    iterator end() const { return iterator(); }

private:
    unsigned m_n;
    unsigned m_m;
};

inline CompositionRange compositions(unsigned n, unsigned m)
{
    return CompositionRange(n, m);
}

/// Materialized form of `compositions`.
std::vector<Composition> composition_list(unsigned n, unsigned m);

} // namespace symid
