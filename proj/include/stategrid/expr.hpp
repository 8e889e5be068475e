#pragma once

#include "stategrid/value.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace stategrid {

class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

enum class CmpOp : std::uint8_t { Lt, Gt, Eq, Le, Ge };

std::string_view to_string(CmpOp op) noexcept;

/// Index of a timed family: the current index i, its successor i+1, or a
/// fixed natural number.
struct TimeIndex {
  enum class Kind : std::uint8_t { Current, Next, Literal };
  Kind kind = Kind::Current;
  std::uint32_t literal = 0;

  static TimeIndex current() { return {Kind::Current, 0}; }
  static TimeIndex next() { return {Kind::Next, 0}; }
  static TimeIndex at(std::uint32_t n) { return {Kind::Literal, n}; }

  friend bool operator==(const TimeIndex&, const TimeIndex&) = default;
};

namespace node {
struct Atom { std::string name; };
struct RationalLit { Rational value; };
struct SetLit { std::vector<ExprPtr> elements; };
struct TupleLit { std::vector<ExprPtr> elements; };
struct App { std::string fn; std::vector<ExprPtr> args; };
struct Card { ExprPtr of; };
struct AbsDiff { ExprPtr a, b; };
struct Cmp { CmpOp op; ExprPtr lhs, rhs; };
struct Member { ExprPtr x, s; };
struct SubsetOf { ExprPtr a, b; };
struct Not { ExprPtr e; };
struct And { ExprPtr a, b; };
struct Or { ExprPtr a, b; };
struct Implies { ExprPtr a, b; };
struct Forall { std::string var, carrier; ExprPtr body; };
struct Exists { std::string var, carrier; ExprPtr body; };
struct AtTime { std::string family; TimeIndex index; };
} // namespace node

/// Immutable AST node of the predicate definition language. Children are
/// shared, so copies are cheap and sub-trees may be reused.
class Expr {
public:
  using Node = std::variant<node::Atom, node::RationalLit, node::SetLit, node::TupleLit,
                            node::App, node::Card, node::AbsDiff, node::Cmp, node::Member,
                            node::SubsetOf, node::Not, node::And, node::Or, node::Implies,
                            node::Forall, node::Exists, node::AtTime>;

  explicit Expr(Node n) : node_(std::move(n)) {}

  const Node& node() const noexcept { return node_; }
  template <class T> const T* as() const noexcept { return std::get_if<T>(&node_); }
  template <class T> bool is() const noexcept { return std::holds_alternative<T>(node_); }

  /// True for nodes denoting a truth value rather than a domain element.
  bool is_formula() const noexcept;

  /// Direct sub-expressions, left to right.
  std::vector<ExprPtr> children() const;

private:
  Node node_;
};

bool operator==(const Expr& a, const Expr& b);
bool same(const ExprPtr& a, const ExprPtr& b);

/// Constructors for building ASTs in code.
namespace build {
ExprPtr atom(std::string name);
ExprPtr lit(Rational value);
ExprPtr lit(long long value);
ExprPtr set(std::vector<ExprPtr> elements);
ExprPtr tuple(std::vector<ExprPtr> elements);
ExprPtr app(std::string fn, std::vector<ExprPtr> args);
ExprPtr card(ExprPtr of);
ExprPtr abs_diff(ExprPtr a, ExprPtr b);
ExprPtr cmp(CmpOp op, ExprPtr lhs, ExprPtr rhs);
ExprPtr member(ExprPtr x, ExprPtr s);
ExprPtr subset(ExprPtr a, ExprPtr b);
ExprPtr negate(ExprPtr e);
ExprPtr conj(ExprPtr a, ExprPtr b);
ExprPtr disj(ExprPtr a, ExprPtr b);
ExprPtr implies(ExprPtr a, ExprPtr b);
ExprPtr forall(std::string var, std::string carrier, ExprPtr body);
ExprPtr exists(std::string var, std::string carrier, ExprPtr body);
ExprPtr at_time(std::string family, TimeIndex index);
} // namespace build

/// Names not bound by an enclosing quantifier. Quantifier carriers and
/// the builtin operators are not included.
std::set<std::string> free_vars(const Expr& e);

/// Every non-builtin name the expression depends on: free names plus the
/// carriers quantifiers range over.
std::set<std::string> symbols_of(const Expr& e);

/// Renames free symbols and quantifier carriers; bound variables and
/// builtins are untouched. Names missing from the map are kept.
ExprPtr rename_symbols(const ExprPtr& e, const std::map<std::string, std::string>& renaming);

/// Number of nodes; node ids used by placements are pre-order positions.
std::size_t node_count(const Expr& e);

/// Pre-order walk; the callback receives the node id and the bound names
/// in scope at that node.
void walk_preorder(const Expr& e,
                   const std::function<void(std::size_t id, const Expr&,
                                            const std::set<std::string>& bound)>& visit);

} // namespace stategrid
