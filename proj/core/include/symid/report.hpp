#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "symid/identities.hpp"

namespace symid
{

/// Flat JSON object:
/// {"identity", "m", "n", "mode", "holds", "lhs_terms", "rhs_terms",
///  "residual_terms", "elapsed_ms", "params", "i", "seed", "residual_sample"}.
/// Fractions in "params" are "p/q" strings; absent optionals are null.
std::string to_json(const IdentityReport &report, int indent = -1);
std::string to_json(const std::vector<IdentityReport> &reports, int indent = -1);

/// Inverse of to_json. Throws std::invalid_argument on schema violations.
IdentityReport report_from_json(std::string_view text);
std::vector<IdentityReport> reports_from_json(std::string_view text);

std::string csv_header();
std::string to_csv_row(const IdentityReport &report);

/// One human-readable line, e.g. `thm12 m=3 n=4 symbolic: holds (...)`.
std::string to_text(const IdentityReport &report);

} // namespace symid
