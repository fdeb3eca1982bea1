// Table file formats and builder spec files.
//
// Text table: optional '#' comment lines, a line with n, then n lines of n
// whitespace-separated 0-based indices (row = left factor). JSON table:
// {"order": n, "table": [[...], ...]}.
#pragma once

#include <string>
#include <string_view>

#include "semiforge/builders.hpp"
#include "semiforge/rees.hpp"
#include "semiforge/semigroup.hpp"

namespace semiforge {

/// Detects JSON by a leading '{'. Throws ParseError on malformed input and
/// BadEntryError/NotAssociativeError when the table is not a semigroup.
FiniteSemigroup parse_table(std::string_view text);

FiniteSemigroup parse_table_text(std::string_view text);
FiniteSemigroup parse_table_json(std::string_view text);

std::string format_table_text(const FiniteSemigroup& s);
std::string format_table_json(const FiniteSemigroup& s);

/// Rees spec text: optional '#' comments, group order, the group table rows,
/// a line "i_size l_size", then l_size rows of i_size sandwich entries
/// (group element indices).
ReesSpec parse_rees_spec(std::string_view text);

/// {"y": [[...]], "components": [[[...]], ...],
///  "homs": [{"from": b, "to": a, "map": [...]}, ...]}
StrongSemilatticeData parse_strong_data_json(std::string_view text);

/// {"y": [[...]], "components": [[[...]], ...], "theta": [[...], ...],
///  "elements": [[...], ...] (optional)}
ThetaData parse_theta_data_json(std::string_view text);

}  // namespace semiforge
