#pragma once

#include "stategrid/universe.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace stategrid {

inline constexpr std::string_view document_header = "stategrid-universe v1";

/// Line-oriented text form of a universe. Sections come in a fixed order
/// and entries are sorted, so equal universes give identical bytes.
std::string format_universe(const Universe& u);
/// Throws FormatError(line, reason) or VersionMismatch.
Universe parse_universe(std::string_view text);

void save(const Universe& u, const std::filesystem::path& path);
Universe load(const std::filesystem::path& path);

/// One `cell ...` line without the trailing newline.
std::string format_cell(const StateCell& cell);

/// Parses the value syntax used in model lines: rationals, atoms,
/// parenthesized tuples and braced sets.
Value parse_value(std::string_view text);

} // namespace stategrid
