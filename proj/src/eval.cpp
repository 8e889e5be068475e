#include "stategrid/eval.hpp"

#include "stategrid/error.hpp"
#include "stategrid/parser.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace stategrid {

JudgmentFn booleanize(std::string name, ExprPtr body, std::string object, std::string predicate) {
  if (!body || !free_vars(*body).contains(object)) throw ObjectNotFree(object);
  if (predicate.empty()) predicate = "phi_" + name;
  return JudgmentFn{std::move(name), std::move(predicate), std::move(body), std::move(object)};
}

namespace {

using OptValue = std::optional<Value>;

const Rational& number_of(const Value& v, const char* what) {
  if (!v.is_number()) throw TypeMismatch(std::string(what) + " expects a number, got " + v.to_string());
  return v.as_number();
}

const Value& set_of(const Value& v, const char* what) {
  if (!v.is_set()) throw TypeMismatch(std::string(what) + " expects a set, got " + v.to_string());
  return v;
}

class Evaluator {
public:
  Evaluator(const Model& m, const Vocabulary& vocab) : m_(m), vocab_(vocab) {}

  TriValue formula(const Expr& e, Env& env) {
    using namespace node;
    if (const auto* n = e.as<Cmp>()) return compare(*n, env);
    if (const auto* n = e.as<Member>()) {
      auto x = term(*n->x, env);
      auto s = term(*n->s, env);
      if (!x || !s) return TriValue::Undefinable;
      return lift(set_of(*s, "membership").contains(*x));
    }
    if (const auto* n = e.as<SubsetOf>()) {
      auto a = term(*n->a, env);
      auto b = term(*n->b, env);
      if (!a || !b) return TriValue::Undefinable;
      return lift(set_of(*a, "subset").subset_of(set_of(*b, "subset")));
    }
    if (const auto* n = e.as<Not>()) return not3(formula(*n->e, env));
    if (const auto* n = e.as<And>()) {
      const auto a = formula(*n->a, env);
      if (a == TriValue::False) return a;
      return and3(a, formula(*n->b, env));
    }
    if (const auto* n = e.as<Or>()) {
      const auto a = formula(*n->a, env);
      if (a == TriValue::True) return a;
      return or3(a, formula(*n->b, env));
    }
    if (const auto* n = e.as<Implies>()) {
      const auto a = formula(*n->a, env);
      if (a == TriValue::False) return TriValue::True;
      return implies3(a, formula(*n->b, env));
    }
    if (const auto* n = e.as<Forall>()) return quantify(n->var, n->carrier, *n->body, env, true);
    if (const auto* n = e.as<Exists>()) return quantify(n->var, n->carrier, *n->body, env, false);
    throw TypeMismatch("a term was used where a formula is required");
  }

  OptValue term(const Expr& e, Env& env) {
    using namespace node;
    if (const auto* n = e.as<Atom>()) return atom(n->name, env);
    if (const auto* n = e.as<RationalLit>()) return Value::number(n->value);
    if (const auto* n = e.as<SetLit>()) {
      std::vector<Value> items;
      for (const auto& x : n->elements) {
        auto v = term(*x, env);
        if (!v) return std::nullopt;
        items.push_back(std::move(*v));
      }
      return Value::set(std::move(items));
    }
    if (const auto* n = e.as<TupleLit>()) {
      std::vector<Value> items;
      for (const auto& x : n->elements) {
        auto v = term(*x, env);
        if (!v) return std::nullopt;
        items.push_back(std::move(*v));
      }
      return Value::tuple(std::move(items));
    }
    if (const auto* n = e.as<App>()) return apply(*n, env);
    if (const auto* n = e.as<Card>()) {
      auto s = term(*n->of, env);
      if (!s) return std::nullopt;
      return Value::number(Rational(static_cast<long long>(set_of(*s, "card").items().size())));
    }
    if (const auto* n = e.as<AbsDiff>()) {
      auto a = term(*n->a, env);
      auto b = term(*n->b, env);
      if (!a || !b) return std::nullopt;
      Rational d = number_of(*a, "abs") - number_of(*b, "abs");
      return Value::number(d < 0 ? Rational(-d) : d);
    }
    if (const auto* n = e.as<AtTime>()) return family(n->family, n->index, env);
    throw TypeMismatch("a formula was used where a term is required");
  }

private:
  const Model& m_;
  const Vocabulary& vocab_;

  SymbolKind declared(const std::string& name) const {
    auto kind = vocab_.find(name);
    if (!kind) throw UnboundVariable(name);
    return *kind;
  }

  std::uint32_t resolve(const TimeIndex& idx, const Env& env) const {
    if (idx.kind == TimeIndex::Kind::Literal) return idx.literal;
    if (!env.index) throw UnboundVariable("i");
    return *env.index + (idx.kind == TimeIndex::Kind::Next ? 1 : 0);
  }

  OptValue family(const std::string& name, const TimeIndex& idx, const Env& env) const {
    const auto kind = declared(name);
    if (kind.tag != SymbolKind::Tag::TimedFamily)
      throw TypeMismatch("'" + name + "' is not a timed family");
    const std::uint32_t at = resolve(idx, env);
    auto it = m_.families.find(name);
    if (it == m_.families.end()) return std::nullopt;
    auto slot = it->second.find(at);
    if (slot == it->second.end()) return std::nullopt;
    return Value::set(slot->second);
  }

  OptValue atom(const std::string& name, const Env& env) const {
    if (auto it = env.vars.find(name); it != env.vars.end()) return it->second;
    const auto kind = declared(name);
    switch (kind.tag) {
    case SymbolKind::Tag::CarrierSet:
      if (auto it = m_.carriers.find(name); it != m_.carriers.end()) return Value::set(it->second);
      return std::nullopt;
    case SymbolKind::Tag::Mapping:
      if (auto it = m_.mappings.find(name); it != m_.mappings.end()) return Value::set(it->second);
      return std::nullopt;
    case SymbolKind::Tag::TimedFamily:
      return family(name, TimeIndex::current(), env);
    case SymbolKind::Tag::Predicate:
      break;
    }
    throw TypeMismatch("predicate '" + name + "' has no value");
  }

  // argument values, or nullopt if any is undefinable
  std::optional<std::vector<Value>> arguments(const std::vector<ExprPtr>& args, Env& env) {
    std::vector<Value> out;
    for (const auto& a : args) {
      auto v = term(*a, env);
      if (!v) return std::nullopt;
      out.push_back(std::move(*v));
    }
    return out;
  }

  const ValueSet* graph(const std::string& fn) const {
    const auto kind = declared(fn);
    if (kind.tag != SymbolKind::Tag::Mapping) throw TypeMismatch("'" + fn + "' is not a mapping");
    auto it = m_.mappings.find(fn);
    return it == m_.mappings.end() ? nullptr : &it->second;
  }

  OptValue apply(const node::App& n, Env& env) {
    if (is_builtin_operator(n.fn)) {
      auto args = arguments(n.args, env);
      if (!args) return std::nullopt;
      const auto& a = number_of((*args)[0], n.fn.c_str());
      const auto& b = number_of((*args)[1], n.fn.c_str());
      return Value::number(n.fn == "+" ? Rational(a + b) : Rational(a - b));
    }
    const ValueSet* g = graph(n.fn);
    auto args = arguments(n.args, env);
    if (!g || !args) return std::nullopt;
    OptValue image;
    for (const auto& row : *g) {
      const auto& items = row.items();
      if (items.size() != args->size() + 1) continue;
      if (!std::equal(args->begin(), args->end(), items.begin())) continue;
      if (image) return std::nullopt; // several images
      image = items.back();
    }
    return image;
  }

  TriValue compare(const node::Cmp& n, Env& env) {
    if (const auto* app = n.lhs->as<node::App>();
        n.op == CmpOp::Eq && app && !is_builtin_operator(app->fn)) {
      const ValueSet* g = graph(app->fn);
      auto args = arguments(app->args, env);
      auto rhs = term(*n.rhs, env);
      if (!g || !args || !rhs) return TriValue::Undefinable;
      args->push_back(std::move(*rhs));
      return lift(g->contains(Value::tuple(std::move(*args))));
    }
    auto a = term(*n.lhs, env);
    auto b = term(*n.rhs, env);
    if (!a || !b) return TriValue::Undefinable;
    if (n.op == CmpOp::Eq) return lift(*a == *b);
    const auto& x = number_of(*a, "order comparison");
    const auto& y = number_of(*b, "order comparison");
    switch (n.op) {
    case CmpOp::Lt: return lift(x < y);
    case CmpOp::Gt: return lift(x > y);
    case CmpOp::Le: return lift(x <= y);
    case CmpOp::Ge: return lift(x >= y);
    default: break;
    }
    return TriValue::Undefinable;
  }

  TriValue quantify(const std::string& var, const std::string& carrier, const Expr& body,
                    Env& env, bool universal) {
    const auto kind = declared(carrier);
    if (kind.tag != SymbolKind::Tag::CarrierSet)
      throw TypeMismatch("'" + carrier + "' is not a carrier set");
    auto it = m_.carriers.find(carrier);
    if (it == m_.carriers.end()) return TriValue::Undefinable;

    OptValue shadowed;
    if (auto prev = env.vars.find(var); prev != env.vars.end()) shadowed = prev->second;
    TriValue acc = universal ? TriValue::True : TriValue::False;
    const TriValue absorbing = universal ? TriValue::False : TriValue::True;
    for (const auto& element : it->second) {
      env.bind(var, element);
      const TriValue v = formula(body, env);
      acc = universal ? and3(acc, v) : or3(acc, v);
      if (acc == absorbing) break;
    }
    if (shadowed)
      env.bind(var, *shadowed);
    else
      env.vars.erase(var);
    return acc;
  }
};

} // namespace

TriValue eval(const Expr& e, const Model& m, const Env& env, const Vocabulary& vocab) {
  Env scratch = env;
  return Evaluator(m, vocab).formula(e, scratch);
}

std::optional<Value> eval_term(const Expr& e, const Model& m, const Env& env,
                               const Vocabulary& vocab) {
  Env scratch = env;
  return Evaluator(m, vocab).term(e, scratch);
}

TriValue apply(const JudgmentFn& j, const Model& m, const Env& env, const Vocabulary& vocab) {
  return eval(*j.body, m, env, vocab);
}

TriValue apply_to(const JudgmentFn& j, Model m, ValueSet object, const Env& env,
                  const Vocabulary& vocab) {
  m.forget(j.object);
  m.mappings[j.object] = std::move(object);
  return eval(*j.body, m, env, vocab);
}

TriValue apply(const JudgmentComposite& j, const Model& m, const Env& env,
               const Vocabulary& vocab) {
  TriValue acc = TriValue::True;
  for (const auto& part : j.parts) acc = and3(acc, apply(part, m, env, vocab));
  return acc;
}

TriValue func_check(const std::string& f, const Model& m) {
  auto it = m.mappings.find(f);
  if (it == m.mappings.end()) return TriValue::Undefinable;
  // rows are sorted, so rows sharing their argument prefix are adjacent
  const Value* prev = nullptr;
  for (const auto& row : it->second) {
    const auto& items = row.items();
    if (prev) {
      const auto& p = prev->items();
      if (p.size() == items.size() &&
          std::equal(p.begin(), p.end() - 1, items.begin()) && p.back() != items.back())
        return TriValue::False;
    }
    prev = &row;
  }
  return TriValue::True;
}

} // namespace stategrid
