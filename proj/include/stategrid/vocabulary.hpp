#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace stategrid {

struct SymbolKind {
  enum class Tag : std::uint8_t { CarrierSet, Mapping, TimedFamily, Predicate };
  Tag tag = Tag::CarrierSet;
  std::uint32_t arity = 0; // mappings only, always positive there

  static SymbolKind carrier() { return {Tag::CarrierSet, 0}; }
  static SymbolKind mapping(std::uint32_t arity);
  static SymbolKind family() { return {Tag::TimedFamily, 0}; }
  static SymbolKind predicate() { return {Tag::Predicate, 0}; }

  friend bool operator==(const SymbolKind&, const SymbolKind&) = default;
};

/// "set", "map:ARITY", "family" or "pred".
std::string to_string(const SymbolKind& kind);
SymbolKind symbol_kind_from_string(std::string_view text);

/// The words of a definition language: each name has one fixed kind.
class Vocabulary {
public:
  Vocabulary() = default;
  Vocabulary(std::initializer_list<std::pair<const std::string, SymbolKind>> entries);

  /// Re-declaring a name with the same kind is a no-op; with a different
  /// kind it throws IllFormed.
  Vocabulary& declare(const std::string& name, SymbolKind kind);

  std::optional<SymbolKind> find(std::string_view name) const;
  bool contains(std::string_view name) const { return find(name).has_value(); }
  const std::map<std::string, SymbolKind, std::less<>>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  friend bool operator==(const Vocabulary&, const Vocabulary&) = default;

private:
  std::map<std::string, SymbolKind, std::less<>> entries_;
};

/// Binary field operations available in every vocabulary.
bool is_builtin_operator(std::string_view name);

} // namespace stategrid
