#pragma once

#include "stategrid/value.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <string>

namespace stategrid {

/// A finite interpretation used for evaluation. Mappings are relations,
/// stored as sets of (arg..., value) tuples; functionality is checked on
/// demand, never assumed. A name is interpreted iff it has an entry.
struct Model {
  std::map<std::string, ValueSet> carriers;
  std::map<std::string, ValueSet> mappings;
  std::map<std::string, std::map<std::uint32_t, ValueSet>> families;

  bool interprets(const std::string& name) const;
  std::set<std::string> interpreted() const;
  /// Removes every interpretation of name.
  void forget(const std::string& name);

  friend bool operator==(const Model&, const Model&) = default;
};

/// Builds a mapping relation from (argument, value) pairs.
ValueSet unary_relation(std::initializer_list<std::pair<Rational, Rational>> pairs);
ValueSet rational_set(std::initializer_list<Rational> values);
ValueSet atom_set(std::initializer_list<const char*> atoms);

/// One time slice of a universe. Families hold the single observation at
/// this slice's own time.
struct Snapshot {
  std::map<std::string, ValueSet> carriers;
  std::map<std::string, ValueSet> mappings;
  std::map<std::string, ValueSet> families;

  bool interprets(const std::string& name) const;
  std::set<std::string> interpreted() const;

  friend bool operator==(const Snapshot&, const Snapshot&) = default;
};

} // namespace stategrid
