#include "symid/var_name.hpp"

#include <cctype>
#include <deque>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

namespace symid
{
namespace
{

struct Entry {
    std::string name;
    std::string stem;
    std::optional<unsigned> index;
};

class Registry
{
public:
    std::uint32_t intern(std::string_view name)
    {
        {
            std::shared_lock lock(m_mutex);
            if (auto it = m_ids.find(std::string(name)); it != m_ids.end()) {
                return it->second;
            }
        }
        Entry entry = parse(name);
        std::unique_lock lock(m_mutex);
        if (auto it = m_ids.find(entry.name); it != m_ids.end()) {
            return it->second;
        }
        const auto id = static_cast<std::uint32_t>(m_entries.size());
        m_ids.emplace(entry.name, id);
        m_entries.push_back(std::move(entry));
        return id;
    }

    Entry get(std::uint32_t id) const
    {
        std::shared_lock lock(m_mutex);
        if (id >= m_entries.size()) {
            throw std::out_of_range("unknown variable id");
        }
        return m_entries[id];
    }

private:
    static Entry parse(std::string_view name)
    {
        const std::string s(name);
        auto bad = [&] { return std::invalid_argument("invalid variable name '" + s + "'"); };
        if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) {
            throw bad();
        }
        for (char c : s) {
            if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') {
                throw bad();
            }
        }
        if (s.back() == '_') {
            throw bad();
        }
        Entry e{s, s, std::nullopt};
        const auto us = s.rfind('_');
        if (us != std::string::npos) {
            const std::string tail = s.substr(us + 1);
            if (tail.find_first_not_of("0123456789") == std::string::npos) {
                if (tail.size() > 1 && tail[0] == '0') {
                    throw bad();
                }
                e.stem = s.substr(0, us);
                e.index = static_cast<unsigned>(std::stoul(tail));
            }
        }
        if (e.stem == "x" && e.index && *e.index == 0) {
            throw std::invalid_argument("variable family x is indexed from 1: '" + s + "'");
        }
        return e;
    }

    mutable std::shared_mutex m_mutex;
    std::unordered_map<std::string, std::uint32_t> m_ids;
    std::deque<Entry> m_entries;
};

Registry &registry()
{
    static Registry r;
    return r;
}

} // namespace

VarName VarName::of(std::string_view name)
{
    return VarName(registry().intern(name));
}

VarName VarName::x(unsigned i)
{
    return of("x_" + std::to_string(i));
}

VarName VarName::r(unsigned i)
{
    return of("r_" + std::to_string(i));
}

VarName VarName::a(unsigned l)
{
    return of("a_" + std::to_string(l));
}

VarName VarName::abar(unsigned l)
{
    return of("abar_" + std::to_string(l));
}

VarName VarName::from_id(std::uint32_t id)
{
    registry().get(id);
    return VarName(id);
}

std::string VarName::name() const
{
    return registry().get(m_id).name;
}

std::string VarName::stem() const
{
    return registry().get(m_id).stem;
}

std::optional<unsigned> VarName::index() const
{
    return registry().get(m_id).index;
}

bool canonical_less(VarName a, VarName b)
{
    if (a == b) {
        return false;
    }
    const Entry ea = registry().get(a.id());
    const Entry eb = registry().get(b.id());
    if (ea.stem != eb.stem) {
        return ea.stem < eb.stem;
    }
    if (ea.index != eb.index) {
        return ea.index < eb.index; // unindexed first
    }
    return ea.name < eb.name;
}

} // namespace symid
