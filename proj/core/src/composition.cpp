#include "symid/composition.hpp"

#include <stdexcept>

namespace symid
{

CompositionRange::CompositionRange(unsigned n, unsigned m) : m_n(n), m_m(m)
{
    if (m == 0) {
        throw std::invalid_argument("compositions: at least one part is required");
    }
}

CompositionRange::iterator::iterator(unsigned n, unsigned m) : m_done(false)
{
    m_current.target = n;
    m_current.parts.assign(m, 0);
    m_current.parts.back() = n;
}

CompositionRange::iterator &CompositionRange::iterator::operator++()
{
    auto &parts = m_current.parts;
    const std::size_t m = parts.size();
    // Last nonzero position p >= 1; move one unit from the suffix into p - 1.
    std::size_t p = m;
    for (std::size_t j = m; j-- > 1;) {
        if (parts[j] != 0) {
            p = j;
            break;
        }
    }
    if (p == m) {
        m_done = true;
        return *this;
    }
    const unsigned suffix = parts[p];
    parts[p - 1] += 1;
    parts[p] = 0;
    parts[m - 1] = suffix - 1;
    return *this;
}

std::vector<Composition> composition_list(unsigned n, unsigned m)
{
    std::vector<Composition> out;
    for (const auto &c : compositions(n, m)) {
        out.push_back(c);
    }
    return out;
}

} // namespace symid
