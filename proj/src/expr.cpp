#include "stategrid/expr.hpp"

#include "stategrid/vocabulary.hpp"

namespace stategrid {

std::string_view to_string(CmpOp op) noexcept {
  switch (op) {
  case CmpOp::Lt: return "<";
  case CmpOp::Gt: return ">";
  case CmpOp::Eq: return "=";
  case CmpOp::Le: return "<=";
  case CmpOp::Ge: return ">=";
  }
  return "?";
}

namespace {

template <class... Fs> struct overloaded : Fs... { using Fs::operator()...; };
template <class... Fs> overloaded(Fs...) -> overloaded<Fs...>;

bool same_list(const std::vector<ExprPtr>& a, const std::vector<ExprPtr>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!same(a[i], b[i])) return false;
  return true;
}

} // namespace

bool Expr::is_formula() const noexcept {
  return is<node::Cmp>() || is<node::Member>() || is<node::SubsetOf>() || is<node::Not>() ||
         is<node::And>() || is<node::Or>() || is<node::Implies>() || is<node::Forall>() ||
         is<node::Exists>();
}

std::vector<ExprPtr> Expr::children() const {
  return std::visit(
      overloaded{
          [](const node::Atom&) { return std::vector<ExprPtr>{}; },
          [](const node::RationalLit&) { return std::vector<ExprPtr>{}; },
          [](const node::AtTime&) { return std::vector<ExprPtr>{}; },
          [](const node::SetLit& n) { return n.elements; },
          [](const node::TupleLit& n) { return n.elements; },
          [](const node::App& n) { return n.args; },
          [](const node::Card& n) { return std::vector<ExprPtr>{n.of}; },
          [](const node::AbsDiff& n) { return std::vector<ExprPtr>{n.a, n.b}; },
          [](const node::Cmp& n) { return std::vector<ExprPtr>{n.lhs, n.rhs}; },
          [](const node::Member& n) { return std::vector<ExprPtr>{n.x, n.s}; },
          [](const node::SubsetOf& n) { return std::vector<ExprPtr>{n.a, n.b}; },
          [](const node::Not& n) { return std::vector<ExprPtr>{n.e}; },
          [](const node::And& n) { return std::vector<ExprPtr>{n.a, n.b}; },
          [](const node::Or& n) { return std::vector<ExprPtr>{n.a, n.b}; },
          [](const node::Implies& n) { return std::vector<ExprPtr>{n.a, n.b}; },
          [](const node::Forall& n) { return std::vector<ExprPtr>{n.body}; },
          [](const node::Exists& n) { return std::vector<ExprPtr>{n.body}; },
      },
      node_);
}

bool same(const ExprPtr& a, const ExprPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.node().index() != b.node().index()) return false;
  return std::visit(
      overloaded{
          [&](const node::Atom& x) { return x.name == b.as<node::Atom>()->name; },
          [&](const node::RationalLit& x) { return x.value == b.as<node::RationalLit>()->value; },
          [&](const node::AtTime& x) {
            const auto* y = b.as<node::AtTime>();
            return x.family == y->family && x.index == y->index;
          },
          [&](const node::SetLit& x) { return same_list(x.elements, b.as<node::SetLit>()->elements); },
          [&](const node::TupleLit& x) {
            return same_list(x.elements, b.as<node::TupleLit>()->elements);
          },
          [&](const node::App& x) {
            const auto* y = b.as<node::App>();
            return x.fn == y->fn && same_list(x.args, y->args);
          },
          [&](const node::Cmp& x) {
            const auto* y = b.as<node::Cmp>();
            return x.op == y->op && same(x.lhs, y->lhs) && same(x.rhs, y->rhs);
          },
          [&](const node::Forall& x) {
            const auto* y = b.as<node::Forall>();
            return x.var == y->var && x.carrier == y->carrier && same(x.body, y->body);
          },
          [&](const node::Exists& x) {
            const auto* y = b.as<node::Exists>();
            return x.var == y->var && x.carrier == y->carrier && same(x.body, y->body);
          },
          [&](const auto&) { return same_list(a.children(), b.children()); },
      },
      a.node());
}

namespace build {
ExprPtr atom(std::string name) { return std::make_shared<Expr>(node::Atom{std::move(name)}); }
ExprPtr lit(Rational value) { return std::make_shared<Expr>(node::RationalLit{std::move(value)}); }
ExprPtr lit(long long value) { return lit(Rational(value)); }
ExprPtr set(std::vector<ExprPtr> elements) {
  return std::make_shared<Expr>(node::SetLit{std::move(elements)});
}
ExprPtr tuple(std::vector<ExprPtr> elements) {
  return std::make_shared<Expr>(node::TupleLit{std::move(elements)});
}
ExprPtr app(std::string fn, std::vector<ExprPtr> args) {
  return std::make_shared<Expr>(node::App{std::move(fn), std::move(args)});
}
ExprPtr card(ExprPtr of) { return std::make_shared<Expr>(node::Card{std::move(of)}); }
ExprPtr abs_diff(ExprPtr a, ExprPtr b) {
  return std::make_shared<Expr>(node::AbsDiff{std::move(a), std::move(b)});
}
ExprPtr cmp(CmpOp op, ExprPtr lhs, ExprPtr rhs) {
  return std::make_shared<Expr>(node::Cmp{op, std::move(lhs), std::move(rhs)});
}
ExprPtr member(ExprPtr x, ExprPtr s) {
  return std::make_shared<Expr>(node::Member{std::move(x), std::move(s)});
}
ExprPtr subset(ExprPtr a, ExprPtr b) {
  return std::make_shared<Expr>(node::SubsetOf{std::move(a), std::move(b)});
}
ExprPtr negate(ExprPtr e) { return std::make_shared<Expr>(node::Not{std::move(e)}); }
ExprPtr conj(ExprPtr a, ExprPtr b) {
  return std::make_shared<Expr>(node::And{std::move(a), std::move(b)});
}
ExprPtr disj(ExprPtr a, ExprPtr b) {
  return std::make_shared<Expr>(node::Or{std::move(a), std::move(b)});
}
ExprPtr implies(ExprPtr a, ExprPtr b) {
  return std::make_shared<Expr>(node::Implies{std::move(a), std::move(b)});
}
ExprPtr forall(std::string var, std::string carrier, ExprPtr body) {
  return std::make_shared<Expr>(node::Forall{std::move(var), std::move(carrier), std::move(body)});
}
ExprPtr exists(std::string var, std::string carrier, ExprPtr body) {
  return std::make_shared<Expr>(node::Exists{std::move(var), std::move(carrier), std::move(body)});
}
ExprPtr at_time(std::string family, TimeIndex index) {
  return std::make_shared<Expr>(node::AtTime{std::move(family), index});
}
} // namespace build

namespace {

void collect(const Expr& e, std::set<std::string>& bound, std::set<std::string>& out,
             bool with_carriers) {
  auto name = [&](const std::string& n) {
    if (!bound.contains(n) && !is_builtin_operator(n)) out.insert(n);
  };
  auto quantified = [&](const std::string& var, const std::string& carrier, const Expr& body) {
    if (with_carriers) name(carrier);
    const bool fresh = bound.insert(var).second;
    collect(body, bound, out, with_carriers);
    if (fresh) bound.erase(var);
  };
  if (const auto* a = e.as<node::Atom>()) return name(a->name);
  if (const auto* a = e.as<node::App>()) name(a->fn);
  if (const auto* t = e.as<node::AtTime>()) return name(t->family);
  if (const auto* q = e.as<node::Forall>()) return quantified(q->var, q->carrier, *q->body);
  if (const auto* q = e.as<node::Exists>()) return quantified(q->var, q->carrier, *q->body);
  for (const auto& c : e.children()) collect(*c, bound, out, with_carriers);
}

ExprPtr rename(const ExprPtr& e, const std::map<std::string, std::string>& m,
               std::set<std::string>& bound) {
  auto sub = [&](const std::string& n) {
    if (bound.contains(n)) return n;
    auto it = m.find(n);
    return it == m.end() ? n : it->second;
  };
  auto kids = [&](const std::vector<ExprPtr>& xs) {
    std::vector<ExprPtr> out;
    out.reserve(xs.size());
    for (const auto& x : xs) out.push_back(rename(x, m, bound));
    return out;
  };
  auto quantified = [&](const std::string& var, const ExprPtr& body) {
    const bool fresh = bound.insert(var).second;
    auto r = rename(body, m, bound);
    if (fresh) bound.erase(var);
    return r;
  };
  using namespace build;
  return std::visit(
      overloaded{
          [&](const node::Atom& n) { return atom(sub(n.name)); },
          [&](const node::RationalLit&) { return e; },
          [&](const node::AtTime& n) { return at_time(sub(n.family), n.index); },
          [&](const node::SetLit& n) { return set(kids(n.elements)); },
          [&](const node::TupleLit& n) { return tuple(kids(n.elements)); },
          [&](const node::App& n) { return app(sub(n.fn), kids(n.args)); },
          [&](const node::Card& n) { return card(rename(n.of, m, bound)); },
          [&](const node::AbsDiff& n) { return abs_diff(rename(n.a, m, bound), rename(n.b, m, bound)); },
          [&](const node::Cmp& n) { return cmp(n.op, rename(n.lhs, m, bound), rename(n.rhs, m, bound)); },
          [&](const node::Member& n) { return member(rename(n.x, m, bound), rename(n.s, m, bound)); },
          [&](const node::SubsetOf& n) { return subset(rename(n.a, m, bound), rename(n.b, m, bound)); },
          [&](const node::Not& n) { return negate(rename(n.e, m, bound)); },
          [&](const node::And& n) { return conj(rename(n.a, m, bound), rename(n.b, m, bound)); },
          [&](const node::Or& n) { return disj(rename(n.a, m, bound), rename(n.b, m, bound)); },
          [&](const node::Implies& n) { return implies(rename(n.a, m, bound), rename(n.b, m, bound)); },
          [&](const node::Forall& n) {
            // the carrier is resolved outside the binder
            auto carrier = sub(n.carrier);
            return forall(n.var, carrier, quantified(n.var, n.body));
          },
          [&](const node::Exists& n) {
            auto carrier = sub(n.carrier);
            return exists(n.var, carrier, quantified(n.var, n.body));
          },
      },
      e->node());
}

void walk(const Expr& e, std::size_t& next_id, std::set<std::string>& bound,
          const std::function<void(std::size_t, const Expr&, const std::set<std::string>&)>& visit) {
  visit(next_id++, e, bound);
  std::string var;
  if (const auto* q = e.as<node::Forall>()) var = q->var;
  if (const auto* q = e.as<node::Exists>()) var = q->var;
  const bool fresh = !var.empty() && bound.insert(var).second;
  for (const auto& c : e.children()) walk(*c, next_id, bound, visit);
  if (fresh) bound.erase(var);
}

} // namespace

std::set<std::string> free_vars(const Expr& e) {
  std::set<std::string> bound, out;
  collect(e, bound, out, false);
  return out;
}

std::set<std::string> symbols_of(const Expr& e) {
  std::set<std::string> bound, out;
  collect(e, bound, out, true);
  return out;
}

ExprPtr rename_symbols(const ExprPtr& e, const std::map<std::string, std::string>& renaming) {
  std::set<std::string> bound;
  return rename(e, renaming, bound);
}

std::size_t node_count(const Expr& e) {
  std::size_t n = 1;
  for (const auto& c : e.children()) n += node_count(*c);
  return n;
}

void walk_preorder(const Expr& e,
                   const std::function<void(std::size_t, const Expr&,
                                            const std::set<std::string>&)>& visit) {
  std::size_t id = 0;
  std::set<std::string> bound;
  walk(e, id, bound, visit);
}

} // namespace stategrid
