#pragma once

#include "stategrid/expr.hpp"

#include <string>
#include <vector>

namespace stategrid {

/// A predicate wrapped into a 0/1 judgment mapping over one object symbol.
struct JudgmentFn {
  std::string name;      // e.g. "Cont"
  std::string predicate; // label of the wrapped predicate, e.g. "phi_Cont"
  ExprPtr body;
  std::string object; // the tested symbol, free in body
};

/// Throws ObjectNotFree when object does not occur free in body.
JudgmentFn booleanize(std::string name, ExprPtr body, std::string object,
                      std::string predicate = {});

/// A judgment defined as the conjunction of other judgments' outputs
/// (e.g. Int from In, Out and Proc).
struct JudgmentComposite {
  std::string name;
  std::vector<JudgmentFn> parts;
};

} // namespace stategrid
