#include "stategrid/grid.hpp"

#include "stategrid/error.hpp"
#include "stategrid/parser.hpp"

namespace stategrid {

std::string to_string(const Coordinate& c) {
  return "(" + std::to_string(c.depth) + "," + std::to_string(c.hierarchy) + "," +
         std::to_string(c.time) + ")";
}

bool operator==(const CellContent& a, const CellContent& b) {
  if (a.index() != b.index()) return false;
  if (const auto* x = std::get_if<content::GroundSet>(&a))
    return x->name == std::get<content::GroundSet>(b).name;
  if (const auto* x = std::get_if<content::MappingDecl>(&a)) {
    const auto& y = std::get<content::MappingDecl>(b);
    return x->name == y.name && x->arity == y.arity;
  }
  if (const auto* x = std::get_if<content::PredicateState>(&a))
    return same(x->expr, std::get<content::PredicateState>(b).expr);
  return std::get<content::TruthResult>(a).value == std::get<content::TruthResult>(b).value;
}

bool operator==(const StateCell& a, const StateCell& b) {
  return a.id == b.id && a.coord == b.coord && a.label == b.label && a.content == b.content &&
         a.definability == b.definability && a.tags == b.tags;
}

const ExprPtr* StateCell::expr() const {
  if (const auto* p = std::get_if<content::PredicateState>(&content)) return &p->expr;
  return nullptr;
}

void validate_cell(const StateCell& cell) {
  const std::string where = "cell " + std::to_string(cell.id) + ": ";
  if (cell.definability == TriValue::False)
    throw InvalidCell(where + "definability is either true or undefinable");
  if (std::holds_alternative<content::TruthResult>(cell.content) && cell.coord.depth != 1)
    throw InvalidCell(where + "truth results live at depth 1");
  if (cell.tags.contains(std::string(structure_tag)) &&
      !std::holds_alternative<content::PredicateState>(cell.content))
    throw InvalidCell(where + "a structure must be a predicate state");
  if (const auto* p = std::get_if<content::PredicateState>(&cell.content); p && !p->expr)
    throw InvalidCell(where + "predicate state without expression");
  if (const auto* m = std::get_if<content::MappingDecl>(&cell.content); m && m->arity == 0)
    throw InvalidCell(where + "mapping arity must be positive");
}

Grid Grid::put(StateCell cell) const {
  if (cells_.contains(cell.id)) throw DuplicateCell(cell.id);
  return replace(std::move(cell));
}

Grid Grid::replace(StateCell cell) const {
  validate_cell(cell);
  Grid g = erase(cell.id);
  g.index_[cell.coord].insert(cell.id);
  const CellId id = cell.id;
  g.cells_.insert_or_assign(id, std::move(cell));
  return g;
}

Grid Grid::erase(CellId id) const {
  Grid g = *this;
  auto it = g.cells_.find(id);
  if (it == g.cells_.end()) return g;
  auto slot = g.index_.find(it->second.coord);
  slot->second.erase(id);
  if (slot->second.empty()) g.index_.erase(slot);
  g.cells_.erase(it);
  return g;
}

std::vector<StateCell> Grid::at(const Coordinate& c) const {
  std::vector<StateCell> out;
  auto it = index_.find(c);
  if (it == index_.end()) return out;
  for (CellId id : it->second) out.push_back(cells_.at(id));
  return out;
}

const StateCell* Grid::find(CellId id) const {
  auto it = cells_.find(id);
  return it == cells_.end() ? nullptr : &it->second;
}

std::vector<std::string> grid_violations(const Grid& g) {
  std::set<std::pair<std::uint32_t, std::uint32_t>> occupied; // (time, hierarchy)
  for (const auto& [c, ids] : g.index()) occupied.insert({c.time, c.hierarchy});
  std::vector<std::string> out;
  for (const auto& [id, cell] : g.cells()) {
    if (!std::holds_alternative<content::MappingDecl>(cell.content)) continue;
    const auto h = cell.coord.hierarchy;
    if (h > 0 && !occupied.contains({cell.coord.time, h - 1}))
      out.push_back("cell " + std::to_string(id) + " at hierarchy " + std::to_string(h) +
                    " has no domain cell at hierarchy " + std::to_string(h - 1));
  }
  return out;
}

} // namespace stategrid
