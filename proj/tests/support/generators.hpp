#pragma once

// Random well-sorted expressions, models and universes for property tests.

#include "stategrid/expr.hpp"
#include "stategrid/model.hpp"
#include "stategrid/universe.hpp"
#include "stategrid/vocabulary.hpp"

#include <random>
#include <string>
#include <vector>

namespace gen {

using namespace stategrid;
using Rng = std::mt19937_64;

inline std::size_t pick(Rng& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}
inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

/// R, S: set; f: map:1; g: map:2; I, J: family.
inline Vocabulary vocabulary() {
  Vocabulary v;
  v.declare("R", SymbolKind::carrier());
  v.declare("S", SymbolKind::carrier());
  v.declare("f", SymbolKind::mapping(1));
  v.declare("g", SymbolKind::mapping(2));
  v.declare("I", SymbolKind::family());
  v.declare("J", SymbolKind::family());
  return v;
}

inline const std::vector<Rational>& number_pool() {
  static const std::vector<Rational> pool = {Rational(-1), Rational(0), Rational(1, 2), Rational(1),
                                             Rational(2)};
  return pool;
}

inline Rational number(Rng& rng) { return number_pool()[pick(rng, number_pool().size())]; }

struct ExprGen {
  Rng& rng;
  std::vector<std::string> scope;
  int fresh = 0;

  ExprPtr num(int depth) {
    using namespace build;
    if (depth <= 1 || coin(rng, 0.35)) {
      switch (pick(rng, 6)) {
      case 0:
      case 1:
        if (!scope.empty()) return atom(scope[pick(rng, scope.size())]);
        return lit(number(rng));
      case 2: return lit(number(rng));
      case 3: return card(family());
      case 4: return card(atom(coin(rng) ? "R" : "S"));
      default: return card(set({lit(number(rng)), lit(number(rng))}));
      }
    }
    switch (pick(rng, 5)) {
    case 0: return app("f", {num(depth - 1)});
    case 1: return app("g", {num(depth - 1), num(depth - 1)});
    case 2: return app("+", {num(depth - 1), num(depth - 1)});
    case 3: return app("-", {num(depth - 1), num(depth - 1)});
    default: return abs_diff(num(depth - 1), num(depth - 1));
    }
  }

  ExprPtr family() {
    const std::string name = coin(rng) ? "I" : "J";
    switch (pick(rng, 3)) {
    case 0: return build::at_time(name, TimeIndex::current());
    case 1: return build::at_time(name, TimeIndex::next());
    default: return build::at_time(name, TimeIndex::at(static_cast<std::uint32_t>(pick(rng, 3))));
    }
  }

  static CmpOp op(Rng& rng) {
    static const CmpOp ops[] = {CmpOp::Lt, CmpOp::Gt, CmpOp::Eq, CmpOp::Le, CmpOp::Ge};
    return ops[pick(rng, 5)];
  }

  ExprPtr atomic(int depth) {
    using namespace build;
    const int sub = std::max(depth - 1, 1);
    switch (pick(rng, 5)) {
    case 0:
    case 1: return cmp(op(rng), num(sub), num(sub));
    case 2: return cmp(CmpOp::Eq, app("f", {num(sub)}), num(sub));
    case 3: return member(num(sub), atom(coin(rng) ? "R" : "S"));
    default: return subset(family(), family());
    }
  }

  ExprPtr formula(int depth) {
    using namespace build;
    if (depth <= 1 || coin(rng, 0.25)) return atomic(depth);
    switch (pick(rng, 6)) {
    case 0: return negate(formula(depth - 1));
    case 1: return conj(formula(depth - 1), formula(depth - 1));
    case 2: return disj(formula(depth - 1), formula(depth - 1));
    case 3: return implies(formula(depth - 1), formula(depth - 1));
    default: {
      // occasionally reuse a name to exercise shadowing
      std::string var = !scope.empty() && coin(rng, 0.2) ? scope[pick(rng, scope.size())]
                                                          : "x" + std::to_string(fresh++);
      const std::string carrier = coin(rng) ? "R" : "S";
      scope.push_back(var);
      auto body = formula(depth - 1);
      scope.pop_back();
      return pick(rng, 2) == 0 ? forall(var, carrier, body) : exists(var, carrier, body);
    }
    }
  }
};

/// A closed formula of AST depth at most `depth` over vocabulary().
inline ExprPtr formula(Rng& rng, int depth) {
  ExprGen g{rng, {}, 0};
  return g.formula(depth);
}

inline ValueSet numbers(Rng& rng, std::size_t max_size) {
  ValueSet s;
  const std::size_t n = pick(rng, max_size + 1);
  for (std::size_t k = 0; k < n; ++k) s.insert(Value::number(number(rng)));
  return s;
}

inline ValueSet atoms(Rng& rng, std::size_t max_size) {
  static const char* names[] = {"a", "b", "c", "d"};
  ValueSet s;
  const std::size_t n = pick(rng, max_size + 1);
  for (std::size_t k = 0; k < n; ++k) s.insert(Value::atom(names[pick(rng, 4)]));
  return s;
}

/// Carriers of size at most 3; any name may be left uninterpreted and
/// mappings need not be functional.
inline Model model(Rng& rng) {
  Model m;
  for (const char* c : {"R", "S"})
    if (coin(rng, 0.85)) m.carriers[c] = numbers(rng, 3);
  if (coin(rng, 0.85)) {
    ValueSet graph;
    const std::size_t rows = pick(rng, 6);
    for (std::size_t k = 0; k < rows; ++k)
      graph.insert(Value::tuple({Value::number(number(rng)), Value::number(number(rng))}));
    m.mappings["f"] = graph;
  }
  if (coin(rng, 0.85)) {
    ValueSet graph;
    const std::size_t rows = pick(rng, 8);
    for (std::size_t k = 0; k < rows; ++k)
      graph.insert(Value::tuple({Value::number(number(rng)), Value::number(number(rng)),
                                 Value::number(number(rng))}));
    m.mappings["g"] = graph;
  }
  for (const char* name : {"I", "J"})
    for (std::uint32_t t = 0; t < 3; ++t)
      if (coin(rng, 0.8)) m.families[name][t] = atoms(rng, 3);
  return m;
}

/// A universe built through the logged editors: vocabulary(), a few time
/// slices, ground, mapping, predicate and truth cells, and predictions.
inline Universe universe(Rng& rng, const std::string& id) {
  Universe u = new_universe(id);
  const Vocabulary vocab = vocabulary();
  for (const auto& [name, kind] : vocab.entries()) u = u.declare(name, kind);
  u = u.with_depth("R", 5).with_depth("f", 5).with_depth("I", 2);
  const std::size_t slices = 1 + pick(rng, 3);
  for (std::size_t t = 0; t < slices; ++t) {
    if (t > 0) {
      Universe next = u;
      next.snapshots.push_back({});
      u = next.logged("slice", std::to_string(t));
    }
    const auto tt = static_cast<std::uint32_t>(t);
    if (coin(rng, 0.8)) u = u.with_carrier(tt, "R", numbers(rng, 3));
    if (coin(rng, 0.5)) u = u.with_carrier(tt, "S", numbers(rng, 3));
    if (coin(rng, 0.7)) {
      ValueSet graph;
      for (std::size_t k = 0; k < pick(rng, 4); ++k)
        graph.insert(Value::tuple({Value::number(number(rng)), Value::number(number(rng))}));
      u = u.with_mapping(tt, "f", graph);
    }
    if (coin(rng, 0.7)) u = u.with_family(tt, "I", atoms(rng, 3));
  }
  const std::size_t cells = 1 + pick(rng, 6);
  for (std::size_t k = 0; k < cells; ++k) {
    StateCell c;
    c.id = u.grid.next_id();
    const auto t = static_cast<std::uint32_t>(pick(rng, slices));
    c.label = "cell \"" + std::to_string(c.id) + "\"" + (coin(rng, 0.2) ? "\nsecond line" : "");
    switch (pick(rng, 4)) {
    case 0:
      c.coord = {5, 0, t};
      c.content = content::GroundSet{"R"};
      break;
    case 1:
      // a mapping at hierarchy 1 needs a hierarchy-0 cell in its slice
      c.coord = {5, 0, t};
      c.content = content::GroundSet{"S"};
      u = u.with_cell(c);
      c.id = u.grid.next_id();
      c.coord = {5, 1, t};
      c.content = content::MappingDecl{"f", 1};
      break;
    case 2:
      c.coord = {5, static_cast<std::uint32_t>(pick(rng, 4)), t};
      c.content = content::PredicateState{formula(rng, 3)};
      if (coin(rng, 0.5)) c.tags.insert(std::string(structure_tag));
      break;
    default:
      c.coord = {1, 0, t};
      c.content = content::TruthResult{all_trivalues[pick(rng, 3)]};
      break;
    }
    if (coin(rng, 0.2)) c.definability = TriValue::Undefinable;
    if (coin(rng, 0.3)) c.tags.insert("existence");
    u = u.with_cell(c);
  }
  for (const auto& [id, cell] : u.grid.cells()) {
    if (!std::holds_alternative<content::PredicateState>(cell.content) || !coin(rng, 0.5)) continue;
    Prediction p{id, coin(rng), u.t_max() + 1 + static_cast<std::uint32_t>(pick(rng, 3)),
                 Prediction::Status::Pending};
    u.predictions.push_back(p);
  }
  std::sort(u.predictions.begin(), u.predictions.end());
  return u;
}

} // namespace gen
