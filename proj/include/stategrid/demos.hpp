#pragma once

#include "stategrid/intelligence.hpp"
#include "stategrid/judgment.hpp"
#include "stategrid/model.hpp"
#include "stategrid/stratify.hpp"
#include "stategrid/vocabulary.hpp"

#include <map>
#include <string>

namespace stategrid::demos {

// ---- continuity ----

/// R, Eps, Delta: set; f: map:1.
Vocabulary continuity_vocabulary();
/// R, Eps, Delta, f at depth 5 over the builtin defaults.
DepthRegistry continuity_registry();
/// Func(f) and the epsilon-delta condition, in the predicate language.
extern const char* const cont_text;
/// Cont := booleanize(phi_Cont) over f.
JudgmentFn cont_judgment();
std::map<std::string, std::string> continuity_labels();
/// Cont placed in transparent mode at time 0, with display labels.
Placement cont_placement();

/// Identity on {0, 1/2, 1}; eps and delta range over {1/4, 1}.
Model identity_fixture();
/// f = {(0,0), (1/2,0), (1,1)}; eps over {1/4}, delta over {1}.
Model step_fixture();

// ---- intelligence ----

/// I, O, T, V: family.
Vocabulary intelligence_vocabulary();
/// I, O, T, V at depth 2.
DepthRegistry intelligence_registry();
extern const char* const c_in_text;
extern const char* const c_out_text;
extern const char* const c_proc_text;
/// Int from In, Out and Proc.
JudgmentComposite int_composite();
std::map<std::string, std::string> intelligence_labels();
/// Int placed in elevating mode at time 0, with display labels.
Placement int_placement();
/// I grows over 0..2 then shrinks over 2..4; O keeps growing.
Model intelligence_fixture();

// ---- printed demos ----

std::string demo_cont();
std::string demo_intelligence();

} // namespace stategrid::demos
