#pragma once

#include "stategrid/imu.hpp"
#include "stategrid/stratify.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace stategrid::cli {

enum ExitCode : int { ok = 0, domain_error = 1, usage_error = 2 };

/// Runs one command; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// `name depth` per line; blank lines and `#` comments are skipped.
DepthRegistry parse_registry(std::string_view text);

/// stategrid-map v1, then `source <id>`, `target <id>`, `symbol <name>
/// kind=<kind>` lines for the target vocabulary and `map <from> -> <to>`.
struct MapFile {
  TranslationMap map;
  Vocabulary target_vocab;
};
MapFile parse_map_file(std::string_view text);

} // namespace stategrid::cli
