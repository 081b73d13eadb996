#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

namespace symid
{

/// Interned indeterminate name.
///
/// Names are identifiers `[A-Za-z][A-Za-z0-9_]*`. A trailing `_<digits>`
/// makes the name a member of an indexed family (stem `x`, index 3 for
/// `x_3`). The reserved families used by the identity builders are
/// `x_i` (i >= 1), `r_i` (i >= 0; `r_0` appears only before elimination),
/// `a_l` and `abar_l` (l >= 0).
///
/// Equality and hashing use the intern id. `canonical_less` orders by stem,
/// then numeric index, and is what serialization uses.
class VarName
{
public:
    /// Throws std::invalid_argument for malformed names or out-of-range
    /// reserved-family indices.
    static VarName of(std::string_view name);

    static VarName x(unsigned i);
    static VarName r(unsigned i);
    static VarName a(unsigned l);
    static VarName abar(unsigned l);

    std::uint32_t id() const { return m_id; }
    std::string name() const;
    std::string stem() const;
    std::optional<unsigned> index() const;

    friend bool operator==(VarName a, VarName b) { return a.m_id == b.m_id; }

    static VarName from_id(std::uint32_t id);

private:
    explicit VarName(std::uint32_t id) : m_id(id) {}
    std::uint32_t m_id;
};

bool canonical_less(VarName a, VarName b);

} // namespace symid

template <>
struct std::hash<symid::VarName> {
    std::size_t operator()(symid::VarName v) const noexcept { return std::hash<std::uint32_t>{}(v.id()); }
};
