#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"

#include "symid/identities.hpp"
#include "symid/polyfam.hpp"
#include "symid/report.hpp"
#include "symid/sequences.hpp"

namespace symid::cli
{
namespace
{

using nlohmann::json;

struct Output {
    std::string format = "text";
    std::string path;
};

void add_output_options(CLI::App &cmd, Output &o)
{
    cmd.add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    cmd.add_option("--out", o.path, "Write output to this file instead of stdout");
}

/// Writes to --out when given, otherwise to `out`.
void emit(const Output &o, std::ostream &out, const std::string &text)
{
    if (o.path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(o.path);
    if (!file) {
        throw std::runtime_error("cannot open output file '" + o.path + "'");
    }
    file << text;
}

std::string render_numbers(const std::string &kind, unsigned upto, const std::string &format)
{
    const std::size_t first = kind == "btilde" ? 1 : 0;
    if (kind == "btilde" && upto < 1) {
        throw std::invalid_argument("numbers btilde requires --upto >= 1");
    }
    std::vector<std::pair<std::size_t, Rational>> rows;
    for (std::size_t k = first; k <= upto; ++k) {
        if (kind == "bernoulli") {
            rows.emplace_back(k, bernoulli_number(k));
        } else if (kind == "euler") {
            rows.emplace_back(k, euler_number(k));
        } else {
            rows.emplace_back(k, b_tilde(k));
        }
    }
    std::ostringstream os;
    if (format == "json") {
        json j;
        j["kind"] = kind;
        j["rows"] = json::array();
        for (const auto &[k, v] : rows) {
            j["rows"].push_back({{"k", k}, {"value", v.to_string()}});
        }
        os << j.dump(2) << '\n';
    } else if (format == "csv") {
        os << "k,value\n";
        for (const auto &[k, v] : rows) {
            os << k << ',' << v.to_string() << '\n';
        }
    } else {
        for (const auto &[k, v] : rows) {
            os << k << ' ' << v.to_string() << '\n';
        }
    }
    return os.str();
}

std::string render_poly(const std::string &family, unsigned n, const std::string &variable,
                        const std::string &format)
{
    const VarName v = VarName::of(variable);
    const MultiPoly p = family == "bernoulli" ? bernoulli_poly(n, v) : euler_poly(n, v);
    std::ostringstream os;
    if (format == "json") {
        json j{{"family", family}, {"n", n}, {"variable", variable}, {"polynomial", p.to_string()}};
        os << j.dump(2) << '\n';
    } else if (format == "csv") {
        os << "family,n,polynomial\n" << family << ',' << n << ',' << p.to_string() << '\n';
    } else {
        os << p.to_string() << '\n';
    }
    return os.str();
}

std::string render_reports(const std::vector<IdentityReport> &reports, const std::string &format, bool summary)
{
    std::ostringstream os;
    if (format == "json") {
        os << (summary ? to_json(reports, 2) : to_json(reports.front(), 2)) << '\n';
    } else if (format == "csv") {
        os << csv_header() << '\n';
        for (const auto &r : reports) {
            os << to_csv_row(r) << '\n';
        }
    } else {
        std::size_t held = 0;
        for (const auto &r : reports) {
            os << to_text(r) << '\n';
            held += r.holds ? 1 : 0;
        }
        if (summary) {
            os << held << '/' << reports.size() << " identities hold\n";
        }
    }
    return os.str();
}

bool all_hold(const std::vector<IdentityReport> &reports)
{
    for (const auto &r : reports) {
        if (!r.holds) {
            return false;
        }
    }
    return true;
}

Assignment parse_params(const std::vector<std::string> &raw)
{
    Assignment a;
    for (const auto &item : raw) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw std::invalid_argument("--param expects name=value, got '" + item + "'");
        }
        const std::string name = VarName::of(item.substr(0, eq)).name();
        a[name] = Rational::parse(item.substr(eq + 1));
    }
    return a;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Exact verification of symmetric Bernoulli/Euler polynomial identities", "symid"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for all subcommands");

    // numbers
    Output numbers_out;
    std::string numbers_kind;
    unsigned numbers_upto = 10;
    auto *numbers = app.add_subcommand("numbers", "Print exact Bernoulli, Euler or scaled Bernoulli numbers");
    numbers->add_option("kind", numbers_kind, "bernoulli | euler | btilde")
        ->required()
        ->check(CLI::IsMember({"bernoulli", "euler", "btilde"}));
    numbers->add_option("--upto", numbers_upto, "Largest index")->capture_default_str();
    add_output_options(*numbers, numbers_out);

    // poly
    Output poly_out;
    std::string poly_family;
    unsigned poly_n = 0;
    std::string poly_var = "x";
    auto *poly = app.add_subcommand("poly", "Print a Bernoulli or Euler polynomial");
    poly->add_option("family", poly_family, "bernoulli | euler")
        ->required()
        ->check(CLI::IsMember({"bernoulli", "euler"}));
    poly->add_option("--n", poly_n, "Degree")->required();
    poly->add_option("--var", poly_var, "Variable name")->capture_default_str();
    add_output_options(*poly, poly_out);

    // verify
    Output verify_out;
    std::string identity, mode = "symbolic";
    std::optional<unsigned> verify_m, verify_i;
    unsigned verify_n = 1;
    std::optional<std::uint64_t> verify_seed;
    std::vector<std::string> raw_params;
    BuildOptions build;
    auto *verify_cmd = app.add_subcommand("verify", "Verify one identity instance");
    verify_cmd->add_option("--identity", identity, "Identity id")->required();
    verify_cmd->add_option("--m", verify_m, "Number of parts m");
    verify_cmd->add_option("--n", verify_n, "Total degree n")->required();
    verify_cmd->add_option("--i", verify_i, "Index i (lemma22_eq2 only)");
    verify_cmd->add_option("--mode", mode, "symbolic | numeric")
        ->check(CLI::IsMember({"symbolic", "numeric"}))
        ->capture_default_str();
    verify_cmd->add_option("--seed", verify_seed, "Seed for numeric sampling and random tuples");
    verify_cmd->add_option("--param", raw_params, "Numeric assignment name=p/q (repeatable)");
    verify_cmd->add_option("--workers", build.workers, "Threads for the composition sum")->capture_default_str();
    verify_cmd->add_flag("--inject-sign-flip", build.inject_sign_flip,
                         "Negative control: corrupt one sign in the Euler-polynomial builder");
    add_output_options(*verify_cmd, verify_out);

    // verify-all
    Output all_out;
    unsigned max_m = 3, max_n = 3, jobs = 1;
    std::uint64_t all_seed = 0;
    auto *verify_all = app.add_subcommand("verify-all", "Verify the full identity matrix within bounds");
    verify_all->add_option("--max-m", max_m, "Largest m")->capture_default_str()->check(CLI::PositiveNumber);
    verify_all->add_option("--max-n", max_n, "Largest n")->capture_default_str()->check(CLI::PositiveNumber);
    verify_all->add_option("--seed", all_seed, "Seed for random tuples")->capture_default_str();
    verify_all->add_option("--jobs", jobs, "Specs verified concurrently")->capture_default_str();
    add_output_options(*verify_all, all_out);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp &e) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }

    try {
        if (numbers->parsed()) {
            emit(numbers_out, out, render_numbers(numbers_kind, numbers_upto, numbers_out.format));
            return exit_ok;
        }
        if (poly->parsed()) {
            emit(poly_out, out, render_poly(poly_family, poly_n, poly_var, poly_out.format));
            return exit_ok;
        }
        if (verify_cmd->parsed()) {
            IdentitySpec spec;
            spec.id = parse_identity_id(identity);
            spec.m = verify_m;
            spec.n = verify_n;
            spec.mode = parse_mode(mode);
            spec.index = verify_i;
            spec.seed = verify_seed;
            if (!raw_params.empty()) {
                spec.params = parse_params(raw_params);
            }
            spec.validate();
            if (spec.mode == Mode::numeric && !spec.params && !spec.seed) {
                throw std::invalid_argument("numeric mode needs --param values or --seed");
            }
            const IdentityReport report = verify(spec, build);
            emit(verify_out, out, render_reports({report}, verify_out.format, false));
            return report.holds ? exit_ok : exit_failed;
        }
        if (verify_all->parsed()) {
            const auto reports = verify_batch(verify_all_specs(max_m, max_n, all_seed), jobs);
            emit(all_out, out, render_reports(reports, all_out.format, true));
            return all_hold(reports) ? exit_ok : exit_failed;
        }
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

} // namespace symid::cli
