#include "stategrid/demos.hpp"

#include "stategrid/eval.hpp"
#include "stategrid/parser.hpp"

#include <sstream>

namespace stategrid::demos {

const char* const cont_text =
    "(forall x in R . forall y in R . forall z in R . f(x) = y and f(x) = z -> y = z) and "
    "(forall a in R . forall eps in Eps . exists delta in Delta . forall x in R . "
    "abs(x - a) < delta -> abs(f(x) - f(a)) < eps)";

const char* const c_in_text = "card(I@(i+1)) > card(I@i) and card(O@(i+1)) > card(O@i)";
const char* const c_out_text = "card(I@(i+1)) < card(I@i) and card(O@(i+1)) > card(O@i)";
const char* const c_proc_text = "card(T@(i+1)) < card(T@i) or card(V@(i+1)) > card(V@i)";

Vocabulary continuity_vocabulary() {
  Vocabulary v;
  for (const char* name : {"R", "Eps", "Delta"}) v.declare(name, SymbolKind::carrier());
  v.declare("f", SymbolKind::mapping(1));
  return v;
}

DepthRegistry continuity_registry() {
  DepthRegistry r;
  for (const char* name : {"R", "Eps", "Delta", "f"}) r.set(name, 5);
  return r;
}

JudgmentFn cont_judgment() {
  return booleanize("Cont", parse(cont_text, continuity_vocabulary()), "f", "phi_Cont");
}

std::map<std::string, std::string> continuity_labels() {
  return {
      {"R", "Real-number field R"},
      {"Eps", "Real-number field R"},
      {"Delta", "Real-number field R"},
      {"-", "Field operations +, -"},
      {"abs", "Field operations +, -"},
      {"<", "Order predicate <"},
      {"=", "Equality predicate ="},
      {"f", "Function mapping f: R -> R"},
      {"phi_Cont", "phi_Cont(f)"},
      {"Cont", "Cont(f)"},
      {"Bool", "Truth values {True, False}"},
  };
}

Placement cont_placement() {
  return place(cont_judgment(), continuity_vocabulary(), continuity_registry(),
               CompositionMode::Transparent, 0)
      .relabel(continuity_labels());
}

Model identity_fixture() {
  Model m;
  m.carriers["R"] = rational_set({0, Rational(1, 2), 1});
  m.carriers["Eps"] = rational_set({Rational(1, 4), 1});
  m.carriers["Delta"] = rational_set({Rational(1, 4), 1});
  m.mappings["f"] = unary_relation({{0, 0}, {Rational(1, 2), Rational(1, 2)}, {1, 1}});
  return m;
}

Model step_fixture() {
  Model m;
  m.carriers["R"] = rational_set({0, Rational(1, 2), 1});
  m.carriers["Eps"] = rational_set({Rational(1, 4)});
  m.carriers["Delta"] = rational_set({1});
  m.mappings["f"] = unary_relation({{0, 0}, {Rational(1, 2), 0}, {1, 1}});
  return m;
}

Vocabulary intelligence_vocabulary() {
  Vocabulary v;
  for (const char* name : {"I", "O", "T", "V"}) v.declare(name, SymbolKind::family());
  return v;
}

DepthRegistry intelligence_registry() {
  DepthRegistry r;
  for (const char* name : {"I", "O", "T", "V"}) r.set(name, 2);
  return r;
}

JudgmentComposite int_composite() {
  const auto vocab = intelligence_vocabulary();
  return JudgmentComposite{
      "Int",
      {
          booleanize("In", parse(c_in_text, vocab), "I", "C_i"),
          booleanize("Out", parse(c_out_text, vocab), "I", "C_o"),
          booleanize("Proc", parse(c_proc_text, vocab), "T", "C_p"),
      }};
}

std::map<std::string, std::string> intelligence_labels() {
  return {
      {"I", "Base set"},
      {"O", "Base set"},
      {"T", "Base set"},
      {"V", "Base set"},
      {"card", "Cardinality mapping"},
      {"time", "Time-series ordered set"},
      {"succ", "Order mapping (id, succ)"},
      {"<", "Order predicates"},
      {">", "Order predicates"},
      {"Bool", "Truth values {True, False}"},
  };
}

Placement int_placement() {
  return place(int_composite(), intelligence_vocabulary(), intelligence_registry(),
               CompositionMode::Elevating, 0)
      .relabel(intelligence_labels());
}

Model intelligence_fixture() {
  Model m;
  const std::vector<ValueSet> input = {
      atom_set({"a"}),
      atom_set({"a", "b"}),
      atom_set({"a", "b", "c"}),
      atom_set({"a", "b"}),
      atom_set({"a"}),
  };
  const std::vector<ValueSet> output = {
      atom_set({}),
      atom_set({"p"}),
      atom_set({"p", "q"}),
      atom_set({"p", "q", "r"}),
      atom_set({"p", "q", "r", "s"}),
  };
  for (std::uint32_t i = 0; i < input.size(); ++i) {
    m.families["I"][i] = input[i];
    m.families["O"][i] = output[i];
    m.families["T"][i] = input[i];
    m.families["V"][i] = atom_set({"a"});
  }
  return m;
}

namespace {

std::string placement_table(const Placement& p) { return report(placement_grid(p)); }

} // namespace

std::string demo_cont() {
  std::ostringstream out;
  out << "Cont(f) placement (transparent)\n" << placement_table(cont_placement()) << '\n';
  const auto cont = cont_judgment();
  const auto vocab = continuity_vocabulary();
  Model uninterpreted = identity_fixture();
  uninterpreted.forget("f");
  out << "identity fixture: Cont = " << to_string(apply(cont, identity_fixture(), {}, vocab)) << '\n';
  out << "step fixture: Cont = " << to_string(apply(cont, step_fixture(), {}, vocab)) << '\n';
  out << "f uninterpreted: Cont = " << to_string(apply(cont, uninterpreted, {}, vocab)) << '\n';
  return out.str();
}

std::string demo_intelligence() {
  std::ostringstream out;
  out << "Int placement (elevating)\n" << placement_table(int_placement()) << '\n';
  const Model m = intelligence_fixture();
  const IntelligenceFamilies fam;
  out << "int_literal is False on every defined model: In needs |I| to grow, Out needs it to "
         "shrink.\n";
  for (std::uint32_t i = 0; i + 1 < 5; ++i)
    out << "int_literal(i=" << i << ") = " << to_string(int_literal(fam, i, m, SubsetMode::Declared))
        << '\n';
  out << "int_windowed([0,3]) = "
      << to_string(int_windowed(fam, {0, 3}, m, SubsetMode::Declared)) << '\n';
  out << "int_windowed([0,1]) = "
      << to_string(int_windowed(fam, {0, 1}, m, SubsetMode::Declared)) << '\n';
  return out.str();
}

} // namespace stategrid::demos
