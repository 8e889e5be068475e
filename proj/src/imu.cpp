#include "stategrid/imu.hpp"

#include "stategrid/document.hpp"
#include "stategrid/error.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace stategrid {

std::set<std::string> cell_symbols(const StateCell& cell, const Vocabulary& vocab) {
  if (const ExprPtr* e = cell.expr()) return symbols_of(**e);
  std::string name;
  if (const auto* g = std::get_if<content::GroundSet>(&cell.content)) name = g->name;
  if (const auto* m = std::get_if<content::MappingDecl>(&cell.content)) name = m->name;
  if (!name.empty() && vocab.contains(name)) return {name};
  return {};
}

// ---------------------------------------------------------------- translate

Universe translate(const Universe& u, const TranslationMap& tm, const Vocabulary& target_vocab) {
  if (tm.source != u.id)
    throw std::invalid_argument("translation map is for '" + tm.source + "', not '" + u.id + "'");
  for (const auto& [from, to] : tm.entries) {
    auto src = u.vocab.find(from);
    auto dst = target_vocab.find(to);
    if (!src) throw KindMismatch(from, "not in the source vocabulary");
    if (!dst) throw KindMismatch(from, "'" + to + "' is not in the target vocabulary");
    if (!(*src == *dst))
      throw KindMismatch(from, to_string(*src) + " cannot map to " + to_string(*dst));
  }

  Universe out = u;
  out.id = tm.target;
  out.vocab = target_vocab;

  Grid grid;
  for (const auto& [id, cell] : u.grid.cells()) {
    StateCell next = cell;
    const auto names = cell_symbols(cell, u.vocab);
    const bool total = std::all_of(names.begin(), names.end(),
                                   [&](const std::string& n) { return tm.entries.contains(n); });
    if (!total) {
      next.definability = TriValue::Undefinable;
      next.tags.insert(std::string(untranslated_tag));
    } else if (const ExprPtr* e = cell.expr()) {
      next.content = content::PredicateState{rename_symbols(*e, tm.entries)};
    } else if (auto* g = std::get_if<content::GroundSet>(&next.content); g && !names.empty()) {
      g->name = tm.entries.at(g->name);
    } else if (auto* m = std::get_if<content::MappingDecl>(&next.content); m && !names.empty()) {
      m->name = tm.entries.at(m->name);
    }
    grid = grid.put(std::move(next));
  }
  out.grid = std::move(grid);

  DepthRegistry reg;
  for (const auto& [name, depth] : u.registry.entries()) {
    if (!u.vocab.contains(name)) {
      reg.set(name, depth);
    } else if (auto it = tm.entries.find(name); it != tm.entries.end()) {
      reg.set(it->second, depth);
    }
  }
  out.registry = std::move(reg);

  auto rename_keys = [&](const std::map<std::string, ValueSet>& in) {
    std::map<std::string, ValueSet> m;
    for (const auto& [name, v] : in)
      if (auto it = tm.entries.find(name); it != tm.entries.end()) m[it->second] = v;
    return m;
  };
  for (auto& s : out.snapshots) {
    s.carriers = rename_keys(s.carriers);
    s.mappings = rename_keys(s.mappings);
    s.families = rename_keys(s.families);
  }

  std::string args = tm.source + ">" + tm.target;
  for (const auto& [from, to] : tm.entries) args += " " + from + "=" + to;
  return out.logged("translate", args);
}

std::vector<CellId> untranslated_cells(const Universe& u) {
  std::vector<CellId> out;
  for (const auto& [id, cell] : u.grid.cells())
    if (cell.tags.contains(std::string(untranslated_tag))) out.push_back(id);
  return out;
}

// ---------------------------------------------------------------- integrate

namespace {

template <class T> struct Resolved {
  std::optional<T> value;
  bool conflict = false;
};

template <class T>
Resolved<T> three_way(const std::optional<T>& base, const std::optional<T>& a,
                      const std::optional<T>& b) {
  if (a == b) return {a, false};
  if (a == base) return {b, false};
  if (b == base) return {a, false};
  return {std::nullopt, true};
}

template <class Map>
std::optional<typename Map::mapped_type> lookup(const Map& m, const typename Map::key_type& k) {
  auto it = m.find(k);
  if (it == m.end()) return std::nullopt;
  return it->second;
}

template <class Map, class OnConflict>
Map merge_maps(const Map& base, const Map& a, const Map& b, OnConflict on_conflict) {
  std::set<typename Map::key_type> keys;
  for (const auto* m : {&base, &a, &b})
    for (const auto& [k, v] : *m) keys.insert(k);
  Map out;
  for (const auto& k : keys) {
    auto r = three_way(lookup(base, k), lookup(a, k), lookup(b, k));
    if (r.conflict) r.value = on_conflict(k, lookup(base, k), lookup(a, k), lookup(b, k));
    if (r.value) out.emplace(k, std::move(*r.value));
  }
  return out;
}

bool is_prefix(const std::vector<LogEntry>& prefix, const std::vector<LogEntry>& log) {
  return prefix.size() <= log.size() && std::equal(prefix.begin(), prefix.end(), log.begin());
}

StateCell demote(StateCell cell) {
  cell.definability = TriValue::Undefinable;
  cell.tags.insert(std::string(conflict_tag));
  if (auto* t = std::get_if<content::TruthResult>(&cell.content)) t->value = TriValue::Undefinable;
  return cell;
}

const Snapshot& snapshot_or_empty(const Universe& u, std::size_t t) {
  static const Snapshot empty;
  return t < u.snapshots.size() ? u.snapshots[t] : empty;
}

} // namespace

MergeOutcome integrate(const Universe& base, const Universe& a, const Universe& b) {
  if (!is_prefix(base.log, a.log) || !is_prefix(base.log, b.log))
    throw UnrelatedUniverses("'" + a.id + "' and '" + b.id + "' do not both descend from '" +
                             base.id + "'");

  MergeOutcome outcome;
  Universe& merged = outcome.merged;
  merged.id = base.id;

  merged.vocab = Vocabulary{};
  const auto vocab_entries = merge_maps(
      base.vocab.entries(), a.vocab.entries(), b.vocab.entries(),
      [](const std::string& name, auto&&...) -> std::optional<SymbolKind> {
        throw UnrelatedUniverses("symbol '" + name + "' declared with different kinds");
      });
  for (const auto& [name, kind] : vocab_entries) merged.vocab.declare(name, kind);

  const auto depths = merge_maps(base.registry.entries(), a.registry.entries(),
                                 b.registry.entries(),
                                 [](const std::string&, const std::optional<std::uint32_t>& base_depth,
                                    auto&&...) { return base_depth; });
  for (const auto& [name, d] : depths) merged.registry.set(name, d);

  // cells
  std::set<CellId> ids;
  for (const auto* u : {&base, &a, &b})
    for (const auto& [id, cell] : u->grid.cells()) ids.insert(id);
  auto cell_of = [](const Universe& u, CellId id) -> std::optional<StateCell> {
    if (const auto* c = u.grid.find(id)) return *c;
    return std::nullopt;
  };
  for (CellId id : ids) {
    const auto in_base = cell_of(base, id);
    const auto left = cell_of(a, id);
    const auto right = cell_of(b, id);
    auto r = three_way(in_base, left, right);
    if (!r.conflict) {
      if (r.value) merged.grid = merged.grid.put(std::move(*r.value));
      continue;
    }
    outcome.conflicts.push_back({id, left, right});
    StateCell basis;
    if (in_base) {
      basis = *in_base;
    } else {
      // added on both sides: pick canonically so the merge is symmetric
      basis = format_cell(*left) < format_cell(*right) ? *left : *right;
    }
    merged.grid = merged.grid.put(demote(std::move(basis)));
  }

  // models
  const std::size_t slices = std::max(a.snapshots.size(), b.snapshots.size());
  merged.snapshots.assign(slices, Snapshot{});
  auto drop = [](auto&&...) { return std::optional<ValueSet>{}; };
  for (std::size_t t = 0; t < slices; ++t) {
    const Snapshot& s0 = snapshot_or_empty(base, t);
    const Snapshot& s1 = snapshot_or_empty(a, t);
    const Snapshot& s2 = snapshot_or_empty(b, t);
    merged.snapshots[t].carriers = merge_maps(s0.carriers, s1.carriers, s2.carriers, drop);
    merged.snapshots[t].mappings = merge_maps(s0.mappings, s1.mappings, s2.mappings, drop);
    merged.snapshots[t].families = merge_maps(s0.families, s1.families, s2.families, drop);
  }

  // predictions, keyed by everything but status
  using Key = std::tuple<CellId, std::uint32_t, bool>;
  auto keyed = [](const Universe& u) {
    std::map<Key, Prediction::Status> m;
    for (const auto& p : u.predictions) m[{p.cell, p.at, p.claim}] = p.status;
    return m;
  };
  const auto statuses =
      merge_maps(keyed(base), keyed(a), keyed(b),
                 [](const Key&, const auto&, const std::optional<Prediction::Status>& x,
                    const std::optional<Prediction::Status>& y) -> std::optional<Prediction::Status> {
                   if (!x) return y;
                   if (!y) return x;
                   return std::max(*x, *y);
                 });
  for (const auto& [key, status] : statuses) {
    const auto& [cell, at, claim] = key;
    if (merged.grid.find(cell)) merged.predictions.push_back({cell, claim, at, status});
  }

  // log: shared history, then both sides' new entries in canonical order
  merged.log = base.log;
  std::set<std::pair<std::string, std::string>> suffix;
  for (const auto* u : {&a, &b})
    for (std::size_t i = base.log.size(); i < u->log.size(); ++i)
      suffix.insert({u->log[i].operation, u->log[i].digest});
  std::string joined;
  for (const auto& [op, digest] : suffix) {
    merged.log.push_back({merged.log.size() + 1, op, digest});
    joined += op + ":" + digest + ";";
  }
  merged = merged.logged("integrate", joined);
  return outcome;
}

// ---------------------------------------------------------------- real time

TickMask TickMask::parse(std::string_view text) {
  TickMask mask;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(start, end - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (!item.empty()) {
      CellId id = 0;
      auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), id);
      if (ec == std::errc() && ptr == item.data() + item.size())
        mask.cells.insert(id);
      else
        mask.names.insert(std::string(item));
    }
    start = end + 1;
  }
  return mask;
}

TickMask TickMask::everything(const Universe& u) {
  TickMask mask;
  for (const auto& [name, kind] : u.vocab.entries()) mask.names.insert(name);
  for (const auto& [id, cell] : u.grid.cells()) mask.cells.insert(id);
  return mask;
}

Universe advance_time(const Universe& u, const TickMask& mask) {
  for (const auto& n : mask.names)
    if (!u.vocab.contains(n)) throw std::invalid_argument("mask names unknown symbol '" + n + "'");
  for (CellId id : mask.cells)
    if (!u.grid.find(id)) throw std::invalid_argument("mask names unknown cell " + std::to_string(id));

  Universe out = u;
  const Snapshot& last = u.snapshots.back();
  Snapshot next;
  for (const auto& n : mask.names) {
    if (auto v = lookup(last.carriers, n)) next.carriers[n] = *v;
    if (auto v = lookup(last.mappings, n)) next.mappings[n] = *v;
    if (auto v = lookup(last.families, n)) next.families[n] = *v;
  }
  out.snapshots.push_back(std::move(next));
  const std::uint32_t now = out.t_max();

  CellId fresh = u.grid.next_id();
  for (CellId id : mask.cells) {
    StateCell copy = *u.grid.find(id);
    copy.id = fresh++;
    copy.coord.time = now;
    out.grid = out.grid.put(std::move(copy));
  }

  std::string args = std::to_string(now);
  for (const auto& n : mask.names) args += " " + n;
  for (CellId id : mask.cells) args += " #" + std::to_string(id);
  return out.logged("tick", args);
}

// ---------------------------------------------------------------- predictions

Universe record_prediction(const Universe& u, CellId cell, bool claim, std::uint32_t at) {
  const StateCell* c = u.grid.find(cell);
  if (!c || !c->expr())
    throw InvalidCell("prediction needs a predicate cell, got id " + std::to_string(cell));
  if (at <= u.t_max()) throw NotAFuturePrediction(at, u.t_max());
  Universe out = u;
  out.predictions.push_back({cell, claim, at, Prediction::Status::Pending});
  std::sort(out.predictions.begin(), out.predictions.end());
  return out.logged("predict", std::to_string(cell) + (claim ? " true " : " false ") +
                                   std::to_string(at));
}

Universe verify_predictions(const Universe& u) {
  Universe out = u;
  std::string args;
  for (auto& p : out.predictions) {
    if (p.status != Prediction::Status::Pending || p.at > u.t_max()) continue;
    const StateCell* cell = u.grid.find(p.cell);
    if (!cell || !cell->expr()) continue;
    const TriValue v = u.eval_at(**cell->expr(), p.at);
    if (!definable(v)) continue;
    p.status = is_true(v) == p.claim ? Prediction::Status::Confirmed : Prediction::Status::Refuted;
    args += std::to_string(p.cell) + "@" + std::to_string(p.at) + "=" +
            std::string(to_string(p.status)) + " ";
  }
  return out.logged("verify", args);
}

// ---------------------------------------------------------------- classification

std::string_view to_string(OperationClass c) noexcept {
  return c == OperationClass::Macrocosm ? "macrocosm" : "microcosm";
}

OperationClass classify_operation(const OperationDescriptor& op) {
  return std::includes(op.footprint.begin(), op.footprint.end(), op.vocabulary.begin(),
                       op.vocabulary.end())
             ? OperationClass::Macrocosm
             : OperationClass::Microcosm;
}

namespace {
std::set<std::string> names_of(const Vocabulary& v) {
  std::set<std::string> out;
  for (const auto& [name, kind] : v.entries()) out.insert(name);
  return out;
}
} // namespace

OperationDescriptor describe_translation(const Universe& u, const TranslationMap& tm) {
  OperationDescriptor op{"translate", {}, names_of(u.vocab)};
  for (const auto& [from, to] : tm.entries) op.footprint.insert(from);
  return op;
}

OperationDescriptor describe_merge(const Universe& base, const Universe& a, const Universe& b) {
  OperationDescriptor op{"integrate", {}, names_of(base.vocab)};
  for (const auto* side : {&a, &b}) {
    for (const auto& [id, cell] : side->grid.cells()) {
      const StateCell* before = base.grid.find(id);
      if (before && *before == cell) continue;
      for (const auto& n : cell_symbols(cell, side->vocab)) op.footprint.insert(n);
    }
  }
  return op;
}

// ---------------------------------------------------------------- codomain

CodomainReport codomain_check(const Universe& u) {
  CodomainReport report;
  const Model m = u.model_at(u.t_max());
  for (const auto& [id, cell] : u.grid.cells()) {
    const ExprPtr* e = cell.expr();
    if (!e) continue;
    std::set<std::string> missing;
    for (const auto& n : symbols_of(**e))
      if (!m.interprets(n)) missing.insert(n);
    if (!missing.empty()) report.offending.emplace_back(id, std::move(missing));
  }
  report.verifiable = report.offending.empty();
  return report;
}

} // namespace stategrid
