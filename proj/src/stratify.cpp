#include "stategrid/stratify.hpp"

#include "stategrid/error.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace stategrid {

const std::map<std::string, std::uint32_t, std::less<>>& DepthRegistry::builtin_defaults() {
  static const std::map<std::string, std::uint32_t, std::less<>> defaults{
      {"definability", 0}, {"Bool", 1}, {"card", 2}, {"in", 2},   {"subset", 2},
      {"<", 3},            {">", 3},    {"=", 3},    {"<=", 3},   {">=", 3},
      {"time", 3},         {"succ", 3}, {"+", 4},    {"-", 4},    {"abs", 4},
  };
  return defaults;
}

DepthRegistry::DepthRegistry(
    std::initializer_list<std::pair<const std::string, std::uint32_t>> entries)
    : entries_(entries.begin(), entries.end()) {}

DepthRegistry& DepthRegistry::set(const std::string& name, std::uint32_t depth) {
  entries_[name] = depth;
  return *this;
}

std::optional<std::uint32_t> DepthRegistry::depth_of(std::string_view name) const {
  if (auto it = entries_.find(name); it != entries_.end()) return it->second;
  const auto& d = builtin_defaults();
  if (auto it = d.find(name); it != d.end()) return it->second;
  return std::nullopt;
}

std::uint32_t DepthRegistry::require(std::string_view name) const {
  if (auto d = depth_of(name)) return *d;
  throw UnregisteredSymbol(std::string(name));
}

std::string_view to_string(CompositionMode m) noexcept {
  return m == CompositionMode::Transparent ? "transparent" : "elevating";
}

CompositionMode composition_mode_from_string(std::string_view text) {
  if (text == "transparent") return CompositionMode::Transparent;
  if (text == "elevating") return CompositionMode::Elevating;
  throw std::invalid_argument("unknown composition mode '" + std::string(text) + "'");
}

namespace {

using Bound = std::set<std::string>;

bool is_mapping_symbol(const Expr& e, const Bound& bound, const Vocabulary& vocab) {
  const auto* a = e.as<node::Atom>();
  if (!a || bound.contains(a->name)) return false;
  auto kind = vocab.find(a->name);
  return kind && kind->tag == SymbolKind::Tag::Mapping;
}

// order of the object an operand denotes: a named mapping is a 1st-order
// object, every value is 0th-order
std::uint32_t object_order(const Expr& e, const Bound& bound, const Vocabulary& vocab) {
  return is_mapping_symbol(e, bound, vocab) ? 1 : 0;
}

std::uint32_t hierarchy(const Expr& e, CompositionMode mode, const Vocabulary& vocab,
                        Bound& bound) {
  using namespace node;
  const std::uint32_t lift = mode == CompositionMode::Elevating ? 1 : 0;
  auto max_obj = [&](const std::vector<ExprPtr>& xs) {
    std::uint32_t m = 0;
    for (const auto& x : xs) m = std::max(m, object_order(*x, bound, vocab));
    return m;
  };
  auto predicate_over = [&](const std::vector<ExprPtr>& xs) {
    std::uint32_t m = 0;
    for (const auto& x : xs)
      m = std::max({m, hierarchy(*x, mode, vocab, bound), object_order(*x, bound, vocab)});
    return 1 + m;
  };
  auto composed = [&](const std::vector<ExprPtr>& xs) {
    std::uint32_t m = 0;
    for (const auto& x : xs) m = std::max(m, hierarchy(*x, mode, vocab, bound));
    return lift + m;
  };
  auto quantified = [&](const std::string& var, const Expr& body) {
    const bool fresh = bound.insert(var).second;
    const auto h = lift + hierarchy(body, mode, vocab, bound);
    if (fresh) bound.erase(var);
    return h;
  };

  if (e.is<App>() || e.is<AbsDiff>() || e.is<Card>()) return 1 + max_obj(e.children());
  if (e.is<Cmp>() || e.is<Member>() || e.is<SubsetOf>()) return predicate_over(e.children());
  if (e.is<Not>() || e.is<And>() || e.is<Or>() || e.is<Implies>()) return composed(e.children());
  if (const auto* q = e.as<Forall>()) return quantified(q->var, *q->body);
  if (const auto* q = e.as<Exists>()) return quantified(q->var, *q->body);
  return 0; // atoms, literals, set/tuple literals, timed family members
}

class Placer {
public:
  Placer(const Vocabulary& vocab, const DepthRegistry& reg, CompositionMode mode, std::uint32_t t)
      : vocab_(vocab), reg_(reg), mode_(mode), time_(t) {
    out_.mode = mode;
  }

  // places the expression with node ids starting at offset; returns the
  // root coordinate
  Coordinate expr(const Expr& e, std::size_t offset, const std::string& predicate_label) {
    Bound bound;
    std::size_t next = offset;
    const Coordinate root = node(e, bound, next);
    if (e.is_formula()) {
      PlacedComponent c;
      c.key = predicate_label.empty() ? "predicate" : predicate_label;
      c.label = c.key;
      c.role = PlacedComponent::Role::Predicate;
      c.coord = root;
      c.expr = std::make_shared<Expr>(e);
      add(std::move(c));
    }
    out_.root = offset;
    return root;
  }

  Coordinate judgment(const JudgmentFn& j, std::size_t& offset) {
    const std::string pred = j.predicate.empty() ? "phi_" + j.name : j.predicate;
    const Coordinate body = expr(*j.body, offset, pred);
    offset += node_count(*j.body);
    const Coordinate c{body.depth, body.hierarchy + 1, time_};
    out_.assignments[offset] = c;
    out_.root = offset++;
    add({j.name, j.name, PlacedComponent::Role::Judgment, c, 1, nullptr});
    return c;
  }

  void truth() {
    add({"Bool", "Bool", PlacedComponent::Role::Truth, {reg_.require("Bool"), 0, time_}, 0, nullptr});
  }

  Placement finish() { return std::move(out_); }

  void add(PlacedComponent c) {
    for (auto& existing : out_.components) {
      if (existing.key == c.key) {
        existing.coord.hierarchy = std::max(existing.coord.hierarchy, c.coord.hierarchy);
        existing.coord.depth = std::max(existing.coord.depth, c.coord.depth);
        return;
      }
    }
    out_.components.push_back(std::move(c));
  }

  Placement& out() { return out_; }

private:
  const Vocabulary& vocab_;
  const DepthRegistry& reg_;
  CompositionMode mode_;
  std::uint32_t time_;
  Placement out_;

  void symbol(const std::string& name, std::uint32_t hierarchy_level, PlacedComponent::Role role,
              std::uint32_t arity, std::uint32_t& depth) {
    const auto d = reg_.require(name);
    depth = std::max(depth, d);
    add({name, name, role, {d, hierarchy_level, time_}, arity, nullptr});
  }

  void named(const std::string& name, std::uint32_t& depth) {
    auto kind = vocab_.find(name);
    if (kind && kind->tag == SymbolKind::Tag::Mapping)
      symbol(name, 1, PlacedComponent::Role::Mapping, kind->arity, depth);
    else
      symbol(name, 0, PlacedComponent::Role::Carrier, 0, depth);
  }

  Coordinate node(const Expr& e, Bound& bound, std::size_t& next) {
    using namespace node;
    const std::size_t id = next++;
    const std::uint32_t h = hierarchy(e, mode_, vocab_, bound);
    std::uint32_t depth = 0;

    std::string var;
    if (const auto* q = e.as<Forall>()) {
      named(q->carrier, depth);
      var = q->var;
    } else if (const auto* q = e.as<Exists>()) {
      named(q->carrier, depth);
      var = q->var;
    }
    const bool fresh = !var.empty() && bound.insert(var).second;
    for (const auto& c : e.children()) depth = std::max(depth, node(*c, bound, next).depth);
    if (fresh) bound.erase(var);

    if (const auto* a = e.as<Atom>()) {
      if (!bound.contains(a->name)) named(a->name, depth);
    } else if (const auto* a = e.as<App>()) {
      const auto role = is_builtin_operator(a->fn) ? PlacedComponent::Role::Operator
                                                   : PlacedComponent::Role::Mapping;
      symbol(a->fn, h, role, static_cast<std::uint32_t>(a->args.size()), depth);
    } else if (e.is<AbsDiff>()) {
      symbol("abs", h, PlacedComponent::Role::Operator, 2, depth);
    } else if (e.is<Card>()) {
      symbol("card", h, PlacedComponent::Role::Operator, 1, depth);
    } else if (const auto* c = e.as<Cmp>()) {
      symbol(std::string(to_string(c->op)), h, PlacedComponent::Role::Operator, 2, depth);
    } else if (e.is<Member>()) {
      symbol("in", h, PlacedComponent::Role::Operator, 2, depth);
    } else if (e.is<SubsetOf>()) {
      symbol("subset", h, PlacedComponent::Role::Operator, 2, depth);
    } else if (const auto* t = e.as<AtTime>()) {
      named(t->family, depth);
      symbol("time", 0, PlacedComponent::Role::TimeIndex, 0, depth);
      if (t->index.kind == TimeIndex::Kind::Next)
        symbol("succ", 1, PlacedComponent::Role::IndexMapping, 1, depth);
    }

    const Coordinate c{depth, h, time_};
    out_.assignments[id] = c;
    return c;
  }
};

} // namespace

std::uint32_t hierarchy_of(const Expr& e, CompositionMode mode, const Vocabulary& vocab) {
  Bound bound;
  return hierarchy(e, mode, vocab, bound);
}

std::uint32_t hierarchy_of(const JudgmentFn& j, CompositionMode mode, const Vocabulary& vocab) {
  return hierarchy_of(*j.body, mode, vocab) + 1;
}

std::uint32_t hierarchy_of(const JudgmentComposite& j, CompositionMode mode,
                           const Vocabulary& vocab) {
  std::uint32_t m = 0;
  for (const auto& part : j.parts) m = std::max(m, hierarchy_of(part, mode, vocab));
  return m + 1;
}

std::set<Coordinate> Placement::coordinates() const {
  std::set<Coordinate> out;
  for (const auto& c : components) out.insert(c.coord);
  return out;
}

const PlacedComponent* Placement::component(std::string_view key) const {
  for (const auto& c : components)
    if (c.key == key) return &c;
  return nullptr;
}

Placement Placement::relabel(const std::map<std::string, std::string>& labels) const {
  Placement p = *this;
  for (auto& c : p.components)
    if (auto it = labels.find(c.key); it != labels.end()) c.label = it->second;
  return p;
}

Placement place(const Expr& e, const Vocabulary& vocab, const DepthRegistry& reg,
                CompositionMode mode, std::uint32_t time, const std::string& predicate_label) {
  Placer placer(vocab, reg, mode, time);
  placer.expr(e, 0, predicate_label);
  return placer.finish();
}

Placement place(const JudgmentFn& j, const Vocabulary& vocab, const DepthRegistry& reg,
                CompositionMode mode, std::uint32_t time) {
  Placer placer(vocab, reg, mode, time);
  std::size_t offset = 0;
  placer.judgment(j, offset);
  placer.truth();
  return placer.finish();
}

Placement place(const JudgmentComposite& j, const Vocabulary& vocab, const DepthRegistry& reg,
                CompositionMode mode, std::uint32_t time) {
  Placer placer(vocab, reg, mode, time);
  std::size_t offset = 0;
  std::uint32_t depth = 0;
  std::uint32_t h = 0;
  for (const auto& part : j.parts) {
    const auto c = placer.judgment(part, offset);
    depth = std::max(depth, c.depth);
    h = std::max(h, c.hierarchy);
  }
  const Coordinate c{depth, h + 1, time};
  placer.out().assignments[offset] = c;
  placer.out().root = offset;
  placer.add({j.name, j.name, PlacedComponent::Role::Judgment, c, 1, nullptr});
  placer.truth();
  return placer.finish();
}

Grid placement_grid(const Placement& p, CellId first_id, Grid base) {
  CellId id = first_id;
  for (const auto& comp : p.components) {
    StateCell cell;
    cell.id = id++;
    cell.coord = comp.coord;
    cell.label = comp.label;
    switch (comp.role) {
    case PlacedComponent::Role::Carrier:
    case PlacedComponent::Role::TimeIndex:
    case PlacedComponent::Role::Truth:
      cell.content = content::GroundSet{comp.key};
      break;
    case PlacedComponent::Role::Predicate:
      cell.content = content::PredicateState{comp.expr};
      cell.tags.insert(std::string(structure_tag));
      break;
    default:
      cell.content = content::MappingDecl{comp.key, std::max<std::uint32_t>(comp.arity, 1)};
      break;
    }
    base = base.put(std::move(cell));
  }
  return base;
}

std::string report(const Grid& g) {
  std::ostringstream out;
  out << "depth\thierarchy\ttime\tlabels\n";
  for (const auto& [coord, ids] : g.index()) {
    out << coord.depth << '\t' << coord.hierarchy << '\t' << coord.time << '\t';
    std::vector<std::string_view> seen;
    for (CellId id : ids) {
      const std::string_view label = g.find(id)->label;
      if (std::find(seen.begin(), seen.end(), label) != seen.end()) continue;
      if (!seen.empty()) out << ", ";
      out << label;
      seen.push_back(label);
    }
    out << '\n';
  }
  return out.str();
}

} // namespace stategrid
