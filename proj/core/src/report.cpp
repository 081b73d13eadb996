#include "symid/report.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace symid
{
namespace
{

using json = nlohmann::ordered_json;

json to_object(const IdentityReport &r)
{
    json j;
    j["identity"] = to_string(r.spec.id);
    j["m"] = r.spec.m ? json(*r.spec.m) : json(nullptr);
    j["n"] = r.spec.n;
    j["mode"] = to_string(r.spec.mode);
    j["holds"] = r.holds;
    j["lhs_terms"] = r.lhs_terms;
    j["rhs_terms"] = r.rhs_terms;
    j["residual_terms"] = r.residual_terms;
    j["elapsed_ms"] = r.elapsed_ms;
    if (r.spec.params) {
        json p = json::object();
        for (const auto &[name, value] : *r.spec.params) {
            p[name] = value.to_string();
        }
        j["params"] = std::move(p);
    } else {
        j["params"] = nullptr;
    }
    j["i"] = r.spec.index ? json(*r.spec.index) : json(nullptr);
    j["seed"] = r.spec.seed ? json(*r.spec.seed) : json(nullptr);
    j["residual_sample"] = r.residual_sample ? json(*r.residual_sample) : json(nullptr);
    return j;
}

template <typename T>
std::optional<T> optional_field(const json &j, const char *key)
{
    if (!j.contains(key) || j.at(key).is_null()) {
        return std::nullopt;
    }
    return j.at(key).get<T>();
}

IdentityReport from_object(const json &j)
{
    if (!j.is_object()) {
        throw std::invalid_argument("report must be a JSON object");
    }
    try {
        IdentityReport r;
        r.spec.id = parse_identity_id(j.at("identity").get<std::string>());
        r.spec.m = optional_field<unsigned>(j, "m");
        r.spec.n = j.at("n").get<unsigned>();
        r.spec.mode = parse_mode(j.at("mode").get<std::string>());
        r.holds = j.at("holds").get<bool>();
        r.lhs_terms = j.at("lhs_terms").get<std::size_t>();
        r.rhs_terms = j.at("rhs_terms").get<std::size_t>();
        r.residual_terms = j.at("residual_terms").get<std::size_t>();
        r.elapsed_ms = j.at("elapsed_ms").get<double>();
        if (const auto &p = j.at("params"); !p.is_null()) {
            Assignment a;
            for (const auto &[name, value] : p.items()) {
                a.emplace(name, Rational::parse(value.get<std::string>()));
            }
            r.spec.params = std::move(a);
        }
        r.spec.index = optional_field<unsigned>(j, "i");
        r.spec.seed = optional_field<std::uint64_t>(j, "seed");
        r.residual_sample = optional_field<std::string>(j, "residual_sample");
        return r;
    } catch (const json::exception &e) {
        throw std::invalid_argument(std::string("malformed report: ") + e.what());
    }
}

json parse_or_throw(std::string_view text)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
    }
}

std::string optional_text(const std::optional<unsigned> &v)
{
    return v ? std::to_string(*v) : std::string();
}

} // namespace

std::string to_json(const IdentityReport &report, int indent)
{
    return to_object(report).dump(indent);
}

std::string to_json(const std::vector<IdentityReport> &reports, int indent)
{
    json arr = json::array();
    for (const auto &r : reports) {
        arr.push_back(to_object(r));
    }
    return arr.dump(indent);
}

IdentityReport report_from_json(std::string_view text)
{
    return from_object(parse_or_throw(text));
}

std::vector<IdentityReport> reports_from_json(std::string_view text)
{
    const json arr = parse_or_throw(text);
    if (!arr.is_array()) {
        throw std::invalid_argument("expected a JSON array of reports");
    }
    std::vector<IdentityReport> out;
    for (const auto &j : arr) {
        out.push_back(from_object(j));
    }
    return out;
}

std::string csv_header()
{
    return "identity,m,n,i,mode,holds,lhs_terms,rhs_terms,residual_terms,elapsed_ms";
}

std::string to_csv_row(const IdentityReport &r)
{
    std::ostringstream os;
    os << to_string(r.spec.id) << ',' << optional_text(r.spec.m) << ',' << r.spec.n << ','
       << optional_text(r.spec.index) << ',' << to_string(r.spec.mode) << ',' << (r.holds ? "true" : "false")
       << ',' << r.lhs_terms << ',' << r.rhs_terms << ',' << r.residual_terms << ',' << std::fixed
       << std::setprecision(3) << r.elapsed_ms;
    return os.str();
}

std::string to_text(const IdentityReport &r)
{
    std::ostringstream os;
    os << to_string(r.spec.id);
    if (r.spec.m) {
        os << " m=" << *r.spec.m;
    }
    os << " n=" << r.spec.n;
    if (r.spec.index) {
        os << " i=" << *r.spec.index;
    }
    os << ' ' << to_string(r.spec.mode) << ": " << (r.holds ? "holds" : "FAILS") << " (lhs " << r.lhs_terms
       << " terms, rhs " << r.rhs_terms << " terms, residual " << r.residual_terms << " terms, " << std::fixed
       << std::setprecision(1) << r.elapsed_ms << " ms)";
    if (r.residual_sample) {
        os << "\n  residual: " << *r.residual_sample;
    }
    return os.str();
}

} // namespace symid
