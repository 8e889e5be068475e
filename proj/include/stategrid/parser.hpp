#pragma once

#include "stategrid/expr.hpp"
#include "stategrid/vocabulary.hpp"

#include <string>
#include <string_view>

namespace stategrid {

/// Parses predicate-language text against a vocabulary. The result is
/// well-formed: every free name is declared with a kind that fits its
/// position, applications match their arity, and formulas and terms are
/// not mixed. Throws SyntaxError, UnknownSymbol, ArityMismatch, IllFormed.
ExprPtr parse(std::string_view text, const Vocabulary& vocab);

/// Like parse, but undeclared names are accepted and given the kind their
/// first use implies. Used for cells kept verbatim from another vocabulary.
ExprPtr parse_lenient(std::string_view text, const Vocabulary& vocab);

/// Canonical text with minimal parentheses; parse(print(e)) == e.
std::string print(const Expr& e);

} // namespace stategrid
