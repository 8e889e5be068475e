// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include "stategrid/demos.hpp"
#include "stategrid/document.hpp"
#include "stategrid/error.hpp"
#include "stategrid/eval.hpp"
#include "stategrid/imu.hpp"
#include "stategrid/intelligence.hpp"
#include "stategrid/parser.hpp"
#include "support/generators.hpp"
#include "support/oracle.hpp"

#include <functional>
#include <iostream>
#include <sstream>

using namespace stategrid;

namespace {

constexpr auto F = TriValue::False;
constexpr auto T = TriValue::True;
constexpr auto U = TriValue::Undefinable;

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

using Placed = std::map<Coordinate, std::set<std::string>>;

Placed labels_by_coordinate(const Placement& p) {
  Placed out;
  for (const auto& c : p.components) out[c.coord].insert(c.label);
  return out;
}

// ---- 1, 2

Outcome continuity_placement() {
  Outcome o;
  const std::map<Coordinate, std::string> want = {
      {{5, 0, 0}, "Real-number field R"},      {{4, 1, 0}, "Field operations +, -"},
      {{3, 2, 0}, "Order predicate <"},        {{5, 1, 0}, "Function mapping f: R -> R"},
      {{5, 2, 0}, "phi_Cont(f)"},              {{5, 3, 0}, "Cont(f)"},
      {{1, 0, 0}, "Truth values {True, False}"},
  };
  const auto got = labels_by_coordinate(demos::cont_placement());
  if (got.size() != want.size()) o.fail(std::to_string(got.size()) + " coordinates");
  for (const auto& [c, label] : want) {
    auto it = got.find(c);
    if (it == got.end()) o.fail("missing " + to_string(c));
    else if (!it->second.contains(label)) o.fail("label at " + to_string(c));
  }
  return o;
}

Outcome intelligence_placement() {
  Outcome o;
  const std::map<Coordinate, std::set<std::string>> want = {
      {{2, 0, 0}, {"Base set"}},
      {{2, 1, 0}, {"Cardinality mapping"}},
      {{3, 0, 0}, {"Time-series ordered set"}},
      {{3, 1, 0}, {"Order mapping (id, succ)"}},
      {{3, 2, 0}, {"Order predicates"}},
      {{3, 3, 0}, {"C_i", "C_o", "C_p"}},
      {{3, 4, 0}, {"In", "Out", "Proc"}},
      {{3, 5, 0}, {"Int"}},
      {{1, 0, 0}, {"Truth values {True, False}"}},
  };
  const auto got = labels_by_coordinate(demos::int_placement());
  if (got != want) o.fail("placement differs");
  return o;
}

// ---- 3

Outcome oracle_equivalence() {
  Outcome o;
  gen::Rng rng(20240601);
  const auto v = gen::vocabulary();
  for (int k = 0; k < 10000; ++k) {
    const auto e = gen::formula(rng, 4);
    const Model m = gen::model(rng);
    const auto i = static_cast<std::uint32_t>(gen::pick(rng, 2));
    Env env;
    env.index = i;
    if (eval(*e, m, env, v) != oracle::evaluate(*e, m, v, i)) o.fail("mismatch on " + print(*e));
  }
  return o;
}

// ---- 4

Outcome kleene() {
  Outcome o;
  // min/max over False < Undefinable < True, independent of the library
  auto rank = [](TriValue x) { return x == F ? 0 : x == U ? 1 : 2; };
  auto unrank = [](int r) { return r == 0 ? F : r == 1 ? U : T; };
  auto ref_and = [&](TriValue a, TriValue b) { return unrank(std::min(rank(a), rank(b))); };
  auto ref_or = [&](TriValue a, TriValue b) { return unrank(std::max(rank(a), rank(b))); };
  auto ref_not = [&](TriValue a) { return unrank(2 - rank(a)); };
  auto ref_leq = [](TriValue a, TriValue b) { return a == U || a == b; };
  auto expect = [&](bool ok, const char* law) {
    if (!ok) o.fail(law);
  };
  for (auto a : all_trivalues) {
    expect(not3(not3(a)) == a, "double negation");
    expect(not3(a) == ref_not(a), "not table");
    expect(info_leq(a, a), "info reflexive");
    for (auto b : all_trivalues) {
      expect(and3(a, b) == ref_and(a, b), "and table");
      expect(or3(a, b) == ref_or(a, b), "or table");
      expect(implies3(a, b) == or3(not3(a), b), "implication");
      expect(info_leq(a, b) == ref_leq(a, b), "info order");
      expect(and3(a, b) == and3(b, a), "and commutes");
      expect(or3(a, b) == or3(b, a), "or commutes");
      expect(not3(and3(a, b)) == or3(not3(a), not3(b)), "de morgan and");
      expect(not3(or3(a, b)) == and3(not3(a), not3(b)), "de morgan or");
      for (auto c : all_trivalues) {
        expect(and3(and3(a, b), c) == and3(a, and3(b, c)), "and associates");
        expect(or3(or3(a, b), c) == or3(a, or3(b, c)), "or associates");
      }
      for (auto a2 : all_trivalues)
        for (auto b2 : all_trivalues) {
          if (!info_leq(a, a2) || !info_leq(b, b2)) continue;
          expect(info_leq(and3(a, b), and3(a2, b2)), "and monotone");
          expect(info_leq(or3(a, b), or3(a2, b2)), "or monotone");
        }
      if (info_leq(a, b)) expect(info_leq(not3(a), not3(b)), "not monotone");
      if (definable(a) && definable(b)) {
        const bool x = a == T, y = b == T;
        expect(and3(a, b) == lift(x && y), "classical and");
        expect(or3(a, b) == lift(x || y), "classical or");
        expect(implies3(a, b) == lift(!x || y), "classical implication");
        expect(not3(a) == lift(!x), "classical not");
      }
    }
  }
  return o;
}

// ---- 5

Outcome int_literal_constancy() {
  Outcome o;
  gen::Rng rng(77);
  const IntelligenceFamilies fam;
  for (int k = 0; k < 1000; ++k) {
    Model m;
    const auto i = static_cast<std::uint32_t>(gen::pick(rng, 3));
    for (std::uint32_t t : {i, i + 1}) {
      m.families["I"][t] = gen::atoms(rng, 4);
      m.families["O"][t] = gen::atoms(rng, 4);
      // T and V drawn inside I so the declared reading applies
      ValueSet tsub, vsub;
      for (const auto& x : m.families["I"][t]) {
        if (gen::coin(rng)) tsub.insert(x);
        if (gen::coin(rng)) vsub.insert(x);
      }
      m.families["T"][t] = tsub;
      m.families["V"][t] = vsub;
    }
    try {
      for (auto mode : {SubsetMode::Declared, SubsetMode::Free})
        if (int_literal(fam, i, m, mode) != F) o.fail("int_literal not False");
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
  }
  return o;
}

// ---- 6

Outcome free_proc_closed_form() {
  Outcome o;
  static const char* names[] = {"a", "b", "c", "d"};
  auto subset_of_mask = [](unsigned mask) {
    ValueSet s;
    for (unsigned b = 0; b < 4; ++b)
      if (mask & (1u << b)) s.insert(Value::atom(names[b]));
    return s;
  };
  // every pair of observations I(i), I(i+1) over a four-element pool
  for (unsigned now = 0; now < 16; ++now) {
    for (unsigned next = 0; next < 16; ++next) {
      // exhaustive search for T, V within I at both indices
      bool witness = false;
      for (unsigned t0 = now;; t0 = (t0 - 1) & now) {
        for (unsigned t1 = next;; t1 = (t1 - 1) & next) {
          for (unsigned v0 = now;; v0 = (v0 - 1) & now) {
            for (unsigned v1 = next;; v1 = (v1 - 1) & next) {
              if (std::popcount(t1) < std::popcount(t0) || std::popcount(v1) > std::popcount(v0))
                witness = true;
              if (v1 == 0 || witness) break;
            }
            if (v0 == 0 || witness) break;
          }
          if (t1 == 0 || witness) break;
        }
        if (t0 == 0 || witness) break;
      }
      Model m;
      m.families["I"][0] = subset_of_mask(now);
      m.families["I"][1] = subset_of_mask(next);
      if (c_proc("I", "T", "V", 0, m, SubsetMode::Free) != lift(witness))
        o.fail("closed form differs at |I|=" + std::to_string(std::popcount(now)) + "," +
               std::to_string(std::popcount(next)));
    }
  }
  return o;
}

// ---- 7

// brute force over every (a, eps, delta, x), independent of the evaluator
std::optional<bool> continuity_by_loops(const Model& m) {
  auto f = m.mappings.find("f");
  if (f == m.mappings.end()) return std::nullopt;
  std::map<Rational, std::vector<Rational>> images;
  for (const auto& row : f->second) images[row.items()[0].as_number()].push_back(row.items()[1].as_number());
  auto nums = [&](const char* c) {
    std::vector<Rational> out;
    for (const auto& v : m.carriers.at(c)) out.push_back(v.as_number());
    return out;
  };
  const auto R = nums("R"), E = nums("Eps"), D = nums("Delta");
  for (const auto& x : R)
    if (images[x].size() > 1) return false;
  auto absr = [](Rational q) { return q < 0 ? Rational(-q) : q; };
  for (const auto& a : R)
    for (const auto& eps : E) {
      bool some = false;
      for (const auto& delta : D) {
        bool all = true;
        for (const auto& x : R) {
          if (!(absr(x - a) < delta)) continue;
          if (images[x].empty() || images[a].empty()) return std::nullopt;
          if (!(absr(images[x][0] - images[a][0]) < eps)) all = false;
        }
        some = some || all;
      }
      if (!some) return false;
    }
  return true;
}

Outcome continuity() {
  Outcome o;
  const auto cont = demos::cont_judgment();
  const auto v = demos::continuity_vocabulary();
  Model missing = demos::identity_fixture();
  missing.forget("f");
  const std::vector<std::tuple<const char*, Model, TriValue>> cases = {
      {"identity", demos::identity_fixture(), T},
      {"step", demos::step_fixture(), F},
      {"uninterpreted", missing, U},
  };
  for (const auto& [name, m, want] : cases) {
    const auto loops = continuity_by_loops(m);
    const TriValue reference = loops ? lift(*loops) : U;
    const TriValue got = apply(cont, m, {}, v);
    if (reference != want) o.fail(std::string(name) + ": loop oracle disagrees with expectation");
    if (got != want) o.fail(std::string(name) + ": got " + std::string(to_string(got)));
  }
  return o;
}

// ---- 8

Universe edit_side(gen::Rng& rng, const Universe& base, std::set<CellId>& touched) {
  Universe u = base;
  const auto ids = [&] {
    std::vector<CellId> out;
    for (const auto& [id, c] : u.grid.cells()) out.push_back(id);
    return out;
  }();
  for (CellId id : ids) {
    if (!gen::coin(rng, 0.3)) continue;
    StateCell c = *u.grid.find(id);
    switch (gen::pick(rng, 4)) {
    case 0: c.label = "edit" + std::to_string(gen::pick(rng, 3)); break;
    case 1: c.definability = c.definability == T ? U : T; break;
    case 2: c.tags.insert("tag" + std::to_string(gen::pick(rng, 2))); break;
    default:
      // erase only leaves that nothing depends on
      if (std::holds_alternative<content::GroundSet>(c.content)) {
        touched.insert(id);
        u = u.without_cell(id);
        continue;
      }
      c.label = "other";
    }
    touched.insert(id);
    u = u.with_edited_cell(c);
  }
  if (gen::coin(rng, 0.3)) {
    StateCell c;
    c.id = base.grid.next_id() + gen::pick(rng, 2);
    c.coord = {1, 0, 0};
    c.label = "new";
    c.content = content::TruthResult{all_trivalues[gen::pick(rng, 3)]};
    touched.insert(c.id);
    u = u.with_cell(c);
  }
  return u;
}

bool same_content(const Universe& x, const Universe& y) {
  return x.grid == y.grid && x.vocab == y.vocab && x.snapshots == y.snapshots &&
         x.registry.entries() == y.registry.entries() && x.predictions == y.predictions;
}

Outcome merge_properties() {
  Outcome o;
  gen::Rng rng(4242);
  int disjoint_cases = 0, conflict_cases = 0;
  for (int k = 0; k < 1000; ++k) {
    const Universe base = gen::universe(rng, "m");
    std::set<CellId> ta, tb;
    const Universe a = edit_side(rng, base, ta);
    const Universe b = edit_side(rng, base, tb);

    const auto self = integrate(base, a, a);
    if (!self.conflicts.empty() || self.merged.grid != a.grid || self.merged.snapshots != a.snapshots)
      o.fail("idempotence");

    const auto ab = integrate(base, a, b);
    const auto ba = integrate(base, b, a);
    if (!same_content(ab.merged, ba.merged) || ab.merged.log != ba.merged.log) o.fail("commutativity");
    std::set<CellId> cab, cba;
    for (const auto& c : ab.conflicts) cab.insert(c.cell);
    for (const auto& c : ba.conflicts) cba.insert(c.cell);
    if (cab != cba) o.fail("conflict sets differ");

    // expected conflicts from a direct per-id comparison
    std::set<CellId> expected;
    for (CellId id : ta) {
      if (!tb.contains(id)) continue;
      const StateCell* x = a.grid.find(id);
      const StateCell* y = b.grid.find(id);
      const StateCell* z = base.grid.find(id);
      const bool changed_a = !(x && z && *x == *z) && !(!x && !z);
      const bool changed_b = !(y && z && *y == *z) && !(!y && !z);
      const bool equal = (x && y && *x == *y) || (!x && !y);
      if (changed_a && changed_b && !equal) expected.insert(id);
    }
    if (cab != expected) o.fail("unexpected conflict set");

    bool disjoint = true;
    for (CellId id : ta) disjoint = disjoint && !tb.contains(id);
    if (disjoint) {
      ++disjoint_cases;
      if (!ab.conflicts.empty()) o.fail("disjoint edits conflicted");
      for (CellId id : ta) {
        const StateCell* want = a.grid.find(id);
        const StateCell* got = ab.merged.grid.find(id);
        if ((want == nullptr) != (got == nullptr) || (want && !(*want == *got))) o.fail("left edit lost");
      }
      for (CellId id : tb) {
        const StateCell* want = b.grid.find(id);
        const StateCell* got = ab.merged.grid.find(id);
        if ((want == nullptr) != (got == nullptr) || (want && !(*want == *got))) o.fail("right edit lost");
      }
    }

    for (const auto& c : ab.conflicts) {
      ++conflict_cases;
      const StateCell* m = ab.merged.grid.find(c.cell);
      if (!m) {
        o.fail("conflicted cell missing");
        continue;
      }
      if (m->definability != U || !m->tags.contains(std::string(conflict_tag))) o.fail("conflict not demoted");
      if (const auto* t = std::get_if<content::TruthResult>(&m->content); t && t->value != U)
        o.fail("conflict kept a defined truth value");
    }
  }
  if (disjoint_cases < 100 || conflict_cases < 100) o.fail("generator produced too few cases");
  return o;
}

// ---- 9

Outcome real_time() {
  Outcome o;
  Universe u = new_universe("rt").declare("I", SymbolKind::family()).declare("O", SymbolKind::family());
  u = u.with_family(0, "I", atom_set({"a"})).with_family(0, "O", atom_set({"p"}));
  const std::vector<std::string> queries = {"card(I@i) > 0", "card(O@i) > card(I@i)", "card(I@0) = 1",
                                            "card(O@i) = 1 or card(I@i) = 5"};
  std::vector<ExprPtr> parsed;
  for (const auto& q : queries) parsed.push_back(parse(q, u.vocab));
  auto evals = [&](const Universe& x, std::uint32_t t) {
    std::string out;
    for (const auto& e : parsed) out += std::string(to_string(x.eval_at(*e, t))) + ";";
    return out;
  };

  // history immutability
  std::vector<std::string> before;
  for (std::uint32_t t = 0; t <= u.t_max(); ++t) before.push_back(evals(u, t));
  const auto doc0 = format_universe(u);
  Universe later = u;
  for (const char* mask : {"I", "", "I,O", "O"}) {
    later = advance_time(later, TickMask::parse(mask));
    later = later.with_family(later.t_max(), "I", atom_set({"a", "b"}));
    for (std::uint32_t t = 0; t < before.size(); ++t)
      if (evals(later, t) != before[t]) o.fail("history changed at t=" + std::to_string(t));
    before.push_back(evals(later, later.t_max()));
  }
  if (format_universe(u) != doc0) o.fail("source universe mutated");

  // observation monotonicity over every mask
  const std::vector<std::string> names = {"I", "O"};
  for (unsigned small = 0; small < 4; ++small)
    for (unsigned big = 0; big < 4; ++big) {
      if ((small & big) != small) continue;
      TickMask ms, mb;
      for (unsigned k = 0; k < 2; ++k) {
        if (small & (1u << k)) ms.names.insert(names[k]);
        if (big & (1u << k)) mb.names.insert(names[k]);
      }
      const Universe us = advance_time(u, ms), ub = advance_time(u, mb);
      for (const auto& e : parsed)
        if (!info_leq(us.eval_at(*e, 1), ub.eval_at(*e, 1))) o.fail("larger mask lost information");
    }

  // empty mask: everything undefinable at the new time
  const Universe blank = advance_time(u, {});
  if (!blank.model_at(1).interpreted().empty()) o.fail("empty mask kept interpretations");
  for (const auto& e : parsed)
    if (blank.eval_at(*e, 1) != U)
      o.fail("empty mask left " + print(*e) + " defined");

  // prediction lifecycle
  StateCell cell;
  cell.id = 1;
  cell.coord = {3, 2, 0};
  cell.label = "grows";
  cell.content = content::PredicateState{parse("card(I@2) > card(I@1)", u.vocab)};
  const Universe seeded = u.with_cell(cell);
  auto script = [&](bool claim, const char* mask, ValueSet at1, ValueSet at2) {
    Universe x = record_prediction(seeded, 1, claim, 2);
    x = advance_time(x, TickMask::parse(mask));
    if (!std::string(mask).empty()) x = x.with_family(1, "I", at1);
    x = verify_predictions(x);
    if (x.predictions[0].status != Prediction::Status::Pending) o.fail("resolved before its time");
    x = advance_time(x, TickMask::parse(mask));
    if (!std::string(mask).empty()) x = x.with_family(2, "I", at2);
    x = verify_predictions(x);
    return x;
  };
  const Universe confirmed = script(true, "I", atom_set({"a"}), atom_set({"a", "b"}));
  if (confirmed.predictions[0].status != Prediction::Status::Confirmed) o.fail("not confirmed");
  const Universe refuted = script(false, "I", atom_set({"a"}), atom_set({"a", "b"}));
  if (refuted.predictions[0].status != Prediction::Status::Refuted) o.fail("not refuted");
  const Universe pending = script(true, "", {}, {});
  if (pending.predictions[0].status != Prediction::Status::Pending) o.fail("resolved without evidence");
  for (const Universe* x : {&confirmed, &refuted}) {
    Universe y = verify_predictions(x->with_family(2, "I", atom_set({})));
    y = verify_predictions(advance_time(y, {}));
    if (y.predictions[0].status != x->predictions[0].status) o.fail("resolution reverted");
  }
  return o;
}

// ---- 10

Outcome translation() {
  Outcome o;
  gen::Rng rng(1010);
  const auto source_vocab = gen::vocabulary();
  Vocabulary target;
  std::map<std::string, std::string> total;
  for (const auto& [name, kind] : source_vocab.entries()) {
    target.declare(name + "_t", kind);
    total[name] = name + "_t";
  }
  for (int k = 0; k < 200; ++k) {
    const Universe u = gen::universe(rng, "tr");
    TranslationMap there{"tr", "tt", total}, back{"tt", "tr", {}};
    for (const auto& [a, b] : total) back.entries[b] = a;
    const Universe round = translate(translate(u, there, target), back, u.vocab);
    if (round.grid != u.grid || round.snapshots != u.snapshots || !(round.vocab == u.vocab))
      o.fail("round trip changed the universe");

    // drop one symbol and count affected cells by scanning expressions
    auto partial = there;
    auto it = partial.entries.begin();
    std::advance(it, gen::pick(rng, partial.entries.size()));
    const std::string dropped = it->first;
    partial.entries.erase(it);
    Vocabulary partial_target;
    for (const auto& [from, to] : partial.entries) partial_target.declare(to, *source_vocab.find(from));
    std::size_t expected = 0;
    for (const auto& [id, cell] : u.grid.cells()) {
      bool uses = false;
      if (const ExprPtr* e = cell.expr()) {
        walk_preorder(**e, [&](std::size_t, const Expr& n, const std::set<std::string>& bound) {
          if (const auto* a = n.as<node::Atom>(); a && a->name == dropped && !bound.contains(dropped)) uses = true;
          if (const auto* a = n.as<node::App>(); a && a->fn == dropped) uses = true;
          if (const auto* a = n.as<node::AtTime>(); a && a->family == dropped) uses = true;
          if (const auto* q = n.as<node::Forall>(); q && q->carrier == dropped) uses = true;
          if (const auto* q = n.as<node::Exists>(); q && q->carrier == dropped) uses = true;
        });
      } else if (const auto* g = std::get_if<content::GroundSet>(&cell.content)) {
        uses = g->name == dropped;
      } else if (const auto* m = std::get_if<content::MappingDecl>(&cell.content)) {
        uses = m->name == dropped;
      }
      expected += uses;
    }
    const Universe t = translate(u, partial, partial_target);
    if (untranslated_cells(t).size() != expected) o.fail("flag count differs for " + dropped);
    for (const auto& [id, cell] : t.grid.cells())
      if (!u.grid.find(id) || u.grid.find(id)->coord != cell.coord) o.fail("coordinate moved");
    if (t.grid.cells().size() != u.grid.cells().size()) o.fail("cells lost");
  }
  return o;
}

// ---- 11

Outcome serialization() {
  Outcome o;
  gen::Rng rng(1111);
  for (int k = 0; k < 50; ++k) {
    const Universe u = gen::universe(rng, "s" + std::to_string(k));
    const auto text = format_universe(u);
    const Universe back = parse_universe(text);
    if (!(back == u)) o.fail("round trip differs for universe " + std::to_string(k));
    if (format_universe(back) != text) o.fail("re-save not byte-identical for universe " + std::to_string(k));
  }
  return o;
}

} // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"1 continuity judgment placement is exact", continuity_placement},
      {"2 intelligence judgment placement is exact", intelligence_placement},
      {"3 evaluator agrees with the naive oracle on 10000 pairs", oracle_equivalence},
      {"4 strong Kleene laws hold exhaustively", kleene},
      {"5 int_literal is False on 1000 interpreted tuples", int_literal_constancy},
      {"6 free-mode processing structure equals its closed form", free_proc_closed_form},
      {"7 continuity fixtures match the brute-force loops", continuity},
      {"8 merge properties hold on 1000 edit triples", merge_properties},
      {"9 real-time properties hold on scripted fixtures", real_time},
      {"10 translation properties hold", translation},
      {"11 serialization round trips on 50 universes", serialization},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome r;
    try {
      r = check();
    } catch (const std::exception& e) {
      r.fail(std::string("exception: ") + e.what());
    }
    std::cout << (r.pass ? "PASS " : "FAIL ") << name;
    if (!r.pass) std::cout << " (" << r.detail << ")";
    std::cout << '\n';
    failures += !r.pass;
  }
  return failures == 0 ? 0 : 1;
}
