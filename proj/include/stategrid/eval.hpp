#pragma once

#include "stategrid/expr.hpp"
#include "stategrid/judgment.hpp"
#include "stategrid/model.hpp"
#include "stategrid/trivalue.hpp"
#include "stategrid/vocabulary.hpp"

#include <map>
#include <optional>
#include <string>

namespace stategrid {

/// Variable bindings plus the value of the time index i.
struct Env {
  std::map<std::string, Value> vars;
  std::optional<std::uint32_t> index;

  Env& bind(const std::string& name, Value v) {
    vars.insert_or_assign(name, std::move(v));
    return *this;
  }
  Env& at_index(std::uint32_t i) {
    index = i;
    return *this;
  }
};

/// Three-valued evaluation over a finite model.
///
/// Any atomic sub-expression that needs a declared but uninterpreted name
/// evaluates to Undefinable, and connectives and quantifiers combine the
/// results with the strong-Kleene tables. Quantifiers range over the
/// named finite carrier. An application denotes the unique image of its
/// arguments (no image or several images leave it Undefinable), except on
/// the left of "=", where `f(x) = y` tests membership of (x, y) in the
/// graph of f.
///
/// Throws UnboundVariable for a name that is neither bound in env nor
/// declared in vocab, and TypeMismatch for ill-typed operands.
TriValue eval(const Expr& e, const Model& m, const Env& env, const Vocabulary& vocab);

/// Value of a term, or nullopt when it is not definable in m.
std::optional<Value> eval_term(const Expr& e, const Model& m, const Env& env,
                               const Vocabulary& vocab);

/// Evaluates the judgment's body; the object must be interpreted in m for
/// a defined verdict.
TriValue apply(const JudgmentFn& j, const Model& m, const Env& env, const Vocabulary& vocab);
/// Binds the judgment's object to the given mapping relation first.
TriValue apply_to(const JudgmentFn& j, Model m, ValueSet object, const Env& env,
                  const Vocabulary& vocab);
/// and3 over the parts.
TriValue apply(const JudgmentComposite& j, const Model& m, const Env& env,
               const Vocabulary& vocab);

/// True iff every first component of the relation has a single image;
/// Undefinable when f is not interpreted.
TriValue func_check(const std::string& f, const Model& m);

} // namespace stategrid
