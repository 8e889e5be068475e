#include "stategrid/universe.hpp"

#include "stategrid/document.hpp"
#include "stategrid/error.hpp"
#include "stategrid/parser.hpp"

#include <cstdio>
#include <stdexcept>

namespace stategrid {

std::string_view to_string(Prediction::Status s) noexcept {
  switch (s) {
  case Prediction::Status::Pending: return "pending";
  case Prediction::Status::Confirmed: return "confirmed";
  case Prediction::Status::Refuted: return "refuted";
  }
  return "pending";
}

Prediction::Status prediction_status_from_string(std::string_view text) {
  if (text == "pending") return Prediction::Status::Pending;
  if (text == "confirmed") return Prediction::Status::Confirmed;
  if (text == "refuted") return Prediction::Status::Refuted;
  throw std::invalid_argument("unknown prediction status '" + std::string(text) + "'");
}

std::string digest_of(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Model Universe::model_at(std::uint32_t t) const {
  if (t > t_max()) throw TimeNotMaterialized(t);
  const Snapshot& now = snapshots[t];
  Model m;
  m.carriers = now.carriers;
  m.mappings = now.mappings;
  for (const auto& [name, members] : now.families) {
    auto& history = m.families[name];
    for (std::uint32_t j = 0; j <= t; ++j)
      if (auto it = snapshots[j].families.find(name); it != snapshots[j].families.end())
        history[j] = it->second;
  }
  return m;
}

TriValue Universe::eval_at(const Expr& e, std::uint32_t t) const {
  return eval(e, model_at(t), Env{}.at_index(t), vocab);
}

Universe Universe::logged(std::string operation, std::string_view arguments) const {
  Universe u = *this;
  u.log.push_back({u.log.size() + 1, std::move(operation), digest_of(arguments)});
  return u;
}

Universe Universe::declare(const std::string& name, SymbolKind kind) const {
  Universe u = *this;
  u.vocab.declare(name, kind);
  return u.logged("declare", name + " " + to_string(kind));
}

Universe Universe::with_depth(const std::string& name, std::uint32_t depth) const {
  Universe u = *this;
  u.registry.set(name, depth);
  return u.logged("depth", name + " " + std::to_string(depth));
}

Universe Universe::with_cell(StateCell cell) const {
  Universe u = *this;
  const std::string line = format_cell(cell);
  u.grid = u.grid.put(std::move(cell));
  return u.logged("put-cell", line);
}

Universe Universe::with_edited_cell(StateCell cell) const {
  Universe u = *this;
  const std::string line = format_cell(cell);
  u.grid = u.grid.replace(std::move(cell));
  return u.logged("edit-cell", line);
}

Universe Universe::without_cell(CellId id) const {
  Universe u = *this;
  u.grid = u.grid.erase(id);
  return u.logged("erase-cell", std::to_string(id));
}

namespace {
Snapshot& slot(Universe& u, std::uint32_t t) {
  if (t > u.t_max()) throw TimeNotMaterialized(t);
  return u.snapshots[t];
}
} // namespace

Universe Universe::with_carrier(std::uint32_t t, const std::string& name, ValueSet values) const {
  Universe u = *this;
  const std::string args = std::to_string(t) + " " + name + " " + format_value_set(values);
  slot(u, t).carriers[name] = std::move(values);
  return u.logged("set-carrier", args);
}

Universe Universe::with_mapping(std::uint32_t t, const std::string& name, ValueSet graph) const {
  Universe u = *this;
  const std::string args = std::to_string(t) + " " + name + " " + format_value_set(graph);
  slot(u, t).mappings[name] = std::move(graph);
  return u.logged("set-map", args);
}

Universe Universe::with_family(std::uint32_t t, const std::string& name, ValueSet members) const {
  Universe u = *this;
  const std::string args = std::to_string(t) + " " + name + " " + format_value_set(members);
  slot(u, t).families[name] = std::move(members);
  return u.logged("set-family", args);
}

Universe Universe::without_interpretation(std::uint32_t t, const std::string& name) const {
  Universe u = *this;
  Snapshot& s = slot(u, t);
  s.carriers.erase(name);
  s.mappings.erase(name);
  s.families.erase(name);
  return u.logged("forget", std::to_string(t) + " " + name);
}

Universe new_universe(std::string id) {
  Universe u;
  u.id = std::move(id);
  return u;
}

std::vector<std::string> universe_violations(const Universe& u) {
  std::vector<std::string> out = grid_violations(u.grid);
  if (u.snapshots.empty()) out.push_back("no model snapshot");
  for (const auto& [id, cell] : u.grid.cells()) {
    const ExprPtr* e = cell.expr();
    if (!e || cell.tags.contains(std::string(untranslated_tag))) continue;
    try {
      parse(print(**e), u.vocab);
    } catch (const Error& err) {
      out.push_back("cell " + std::to_string(id) + ": " + err.what());
    }
  }
  for (const auto& p : u.predictions) {
    if (p.status != Prediction::Status::Pending && p.at > u.t_max())
      out.push_back("prediction on cell " + std::to_string(p.cell) + " resolved before its time");
    if (!u.grid.find(p.cell))
      out.push_back("prediction on missing cell " + std::to_string(p.cell));
  }
  return out;
}

} // namespace stategrid
