#include "stategrid/vocabulary.hpp"

#include "stategrid/error.hpp"

#include <charconv>
#include <stdexcept>

namespace stategrid {

SymbolKind SymbolKind::mapping(std::uint32_t arity) {
  if (arity == 0) throw std::invalid_argument("mapping arity must be positive");
  return {Tag::Mapping, arity};
}

std::string to_string(const SymbolKind& kind) {
  switch (kind.tag) {
  case SymbolKind::Tag::CarrierSet: return "set";
  case SymbolKind::Tag::Mapping: return "map:" + std::to_string(kind.arity);
  case SymbolKind::Tag::TimedFamily: return "family";
  case SymbolKind::Tag::Predicate: return "pred";
  }
  return {};
}

SymbolKind symbol_kind_from_string(std::string_view text) {
  if (text == "set") return SymbolKind::carrier();
  if (text == "family") return SymbolKind::family();
  if (text == "pred") return SymbolKind::predicate();
  if (text.starts_with("map:")) {
    std::uint32_t arity = 0;
    const auto digits = text.substr(4);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), arity);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && arity > 0)
      return SymbolKind::mapping(arity);
  }
  throw std::invalid_argument("bad symbol kind '" + std::string(text) + "'");
}

Vocabulary::Vocabulary(std::initializer_list<std::pair<const std::string, SymbolKind>> entries) {
  for (const auto& [name, kind] : entries) declare(name, kind);
}

Vocabulary& Vocabulary::declare(const std::string& name, SymbolKind kind) {
  if (is_builtin_operator(name)) throw IllFormed("cannot redeclare builtin '" + name + "'");
  auto [it, inserted] = entries_.emplace(name, kind);
  if (!inserted && !(it->second == kind))
    throw IllFormed("symbol '" + name + "' already declared as " + to_string(it->second));
  return *this;
}

std::optional<SymbolKind> Vocabulary::find(std::string_view name) const {
  auto it = entries_.find(name);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

bool is_builtin_operator(std::string_view name) { return name == "+" || name == "-"; }

} // namespace stategrid
