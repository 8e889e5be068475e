#pragma once

#include "stategrid/grid.hpp"
#include "stategrid/judgment.hpp"
#include "stategrid/vocabulary.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace stategrid {

/// User-assigned state depths. Builtin keys follow the numeric-system
/// columns: definability 0, Bool 1, card/in/subset 2, comparisons and
/// time/succ 3, field operations 4. Explicit entries override builtins.
class DepthRegistry {
public:
  static const std::map<std::string, std::uint32_t, std::less<>>& builtin_defaults();

  DepthRegistry() = default;
  DepthRegistry(std::initializer_list<std::pair<const std::string, std::uint32_t>> entries);

  DepthRegistry& set(const std::string& name, std::uint32_t depth);
  std::optional<std::uint32_t> depth_of(std::string_view name) const;
  /// Throws UnregisteredSymbol.
  std::uint32_t require(std::string_view name) const;

  const std::map<std::string, std::uint32_t, std::less<>>& entries() const { return entries_; }

  friend bool operator==(const DepthRegistry&, const DepthRegistry&) = default;

private:
  std::map<std::string, std::uint32_t, std::less<>> entries_;
};

/// How connectives and quantifiers affect mapping hierarchy: transparent
/// keeps the maximum of the operands, elevating adds one per layer.
enum class CompositionMode { Transparent, Elevating };

std::string_view to_string(CompositionMode m) noexcept;
CompositionMode composition_mode_from_string(std::string_view text);

std::uint32_t hierarchy_of(const Expr& e, CompositionMode mode, const Vocabulary& vocab);
std::uint32_t hierarchy_of(const JudgmentFn& j, CompositionMode mode, const Vocabulary& vocab);
std::uint32_t hierarchy_of(const JudgmentComposite& j, CompositionMode mode,
                           const Vocabulary& vocab);

/// One grid state a definition uses: a carrier, a mapping or operator
/// symbol, the time index, the defining predicate, a judgment, or the
/// truth-value codomain.
struct PlacedComponent {
  enum class Role { Carrier, Mapping, Operator, TimeIndex, IndexMapping, Predicate, Judgment, Truth };
  std::string key;
  std::string label;
  Role role = Role::Carrier;
  Coordinate coord;
  std::uint32_t arity = 0;
  ExprPtr expr; // Predicate components only
};

struct Placement {
  CompositionMode mode = CompositionMode::Transparent;
  std::size_t root = 0;
  /// Per AST node (pre-order id); judgment roots get ids after their body.
  std::map<std::size_t, Coordinate> assignments;
  /// Symbol-level view, one entry per key, in first-occurrence order.
  std::vector<PlacedComponent> components;

  std::set<Coordinate> coordinates() const;
  const PlacedComponent* component(std::string_view key) const;
  /// Replaces labels for the given keys.
  Placement relabel(const std::map<std::string, std::string>& labels) const;
};

/// Throws UnregisteredSymbol when a name used by the expression has no depth.
Placement place(const Expr& e, const Vocabulary& vocab, const DepthRegistry& reg,
                CompositionMode mode, std::uint32_t time, const std::string& predicate_label = {});
Placement place(const JudgmentFn& j, const Vocabulary& vocab, const DepthRegistry& reg,
                CompositionMode mode, std::uint32_t time);
Placement place(const JudgmentComposite& j, const Vocabulary& vocab, const DepthRegistry& reg,
                CompositionMode mode, std::uint32_t time);

/// Materializes components as grid cells with consecutive ids starting at
/// first_id.
Grid placement_grid(const Placement& p, CellId first_id = 1, Grid base = {});

/// Tab-separated table: header, then one row per occupied coordinate
/// sorted by (depth, hierarchy, time) with distinct labels comma-joined in
/// id order.
std::string report(const Grid& g);

} // namespace stategrid
