#pragma once

#include "stategrid/expr.hpp"
#include "stategrid/trivalue.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace stategrid {

/// Grid address: (state depth, mapping hierarchy, time). The 2-D grid is
/// the time = 0 slice.
struct Coordinate {
  std::uint32_t depth = 0;
  std::uint32_t hierarchy = 0;
  std::uint32_t time = 0;

  friend auto operator<=>(const Coordinate&, const Coordinate&) = default;
};

std::string to_string(const Coordinate& c);

using CellId = std::uint64_t;

namespace content {
struct GroundSet { std::string name; };
struct MappingDecl { std::string name; std::uint32_t arity = 1; };
struct PredicateState { ExprPtr expr; };
struct TruthResult { TriValue value = TriValue::Undefinable; };
} // namespace content

using CellContent = std::variant<content::GroundSet, content::MappingDecl,
                                 content::PredicateState, content::TruthResult>;

bool operator==(const CellContent& a, const CellContent& b);

/// Tag marking a cell as a structure (a labelled predicate state).
inline constexpr std::string_view structure_tag = "structure";

struct StateCell {
  CellId id = 0;
  Coordinate coord;
  std::string label;
  CellContent content;
  TriValue definability = TriValue::True; // True or Undefinable only
  std::set<std::string> tags;

  const ExprPtr* expr() const;
};

bool operator==(const StateCell& a, const StateCell& b);

/// Checks the invariants a single cell must satisfy on its own. Throws
/// InvalidCell.
void validate_cell(const StateCell& cell);

/// Sparse store of cells addressed by coordinate. A value type: put and
/// replace return a new grid and leave the original untouched.
class Grid {
public:
  /// Throws DuplicateCell if the id is taken, InvalidCell on a bad cell.
  Grid put(StateCell cell) const;
  /// Inserts or overwrites by id.
  Grid replace(StateCell cell) const;
  Grid erase(CellId id) const;

  /// Cells whose coordinate equals c, in id order.
  std::vector<StateCell> at(const Coordinate& c) const;
  const StateCell* find(CellId id) const;

  const std::map<CellId, StateCell>& cells() const { return cells_; }
  const std::map<Coordinate, std::set<CellId>>& index() const { return index_; }
  std::size_t size() const { return cells_.size(); }
  bool empty() const { return cells_.empty(); }
  CellId next_id() const { return cells_.empty() ? 1 : cells_.rbegin()->first + 1; }

  friend bool operator==(const Grid& a, const Grid& b) { return a.cells_ == b.cells_; }

private:
  std::map<CellId, StateCell> cells_;
  std::map<Coordinate, std::set<CellId>> index_;
};

inline Grid grid_put(const Grid& g, StateCell cell) { return g.put(std::move(cell)); }
inline std::vector<StateCell> grid_at(const Grid& g, const Coordinate& c) { return g.at(c); }

/// Cross-cell invariants: every MappingDecl at hierarchy n > 0 needs some
/// cell at hierarchy n - 1 in the same time slice to serve as its domain.
/// Returns a description of each violation.
std::vector<std::string> grid_violations(const Grid& g);

} // namespace stategrid
