#include <doctest.h>

#include "stategrid/demos.hpp"
#include "stategrid/error.hpp"
#include "stategrid/parser.hpp"
#include "stategrid/stratify.hpp"

using namespace stategrid;

TEST_CASE("registry defaults and overrides") {
  DepthRegistry r;
  CHECK(r.depth_of("Bool") == 1);
  CHECK(r.depth_of("<") == 3);
  CHECK(r.depth_of("abs") == 4);
  CHECK(r.depth_of("card") == 2);
  CHECK_FALSE(r.depth_of("R").has_value());
  CHECK_THROWS_AS(r.require("R"), UnregisteredSymbol);
  r.set("<", 7);
  CHECK(r.depth_of("<") == 7);
}

TEST_CASE("hierarchy levels") {
  const auto v = demos::continuity_vocabulary();
  CHECK(hierarchy_of(*build::atom("R"), CompositionMode::Transparent, v) == 0);
  CHECK(hierarchy_of(*parse("f(1) = 2", v), CompositionMode::Transparent, v) == 2);
  CHECK(hierarchy_of(*parse("1 < 2", v), CompositionMode::Transparent, v) == 1);
  const auto body = parse(demos::cont_text, v);
  CHECK(hierarchy_of(*body, CompositionMode::Transparent, v) == 2);
  CHECK(hierarchy_of(demos::cont_judgment(), CompositionMode::Transparent, v) == 3);

  const auto iv = demos::intelligence_vocabulary();
  CHECK(hierarchy_of(*parse(demos::c_in_text, iv), CompositionMode::Elevating, iv) == 3);
  CHECK(hierarchy_of(*parse(demos::c_in_text, iv), CompositionMode::Transparent, iv) == 2);
  CHECK(hierarchy_of(demos::int_composite(), CompositionMode::Elevating, iv) == 5);
}

TEST_CASE("single leaf placement") {
  Vocabulary v;
  v.declare("R", SymbolKind::carrier());
  DepthRegistry r;
  r.set("R", 5);
  for (auto mode : {CompositionMode::Transparent, CompositionMode::Elevating}) {
    const auto p = place(*build::atom("R"), v, r, mode, 7);
    CHECK(p.coordinates() == std::set<Coordinate>{{5, 0, 7}});
  }
}

TEST_CASE("unregistered names are rejected") {
  const auto v = demos::continuity_vocabulary();
  CHECK_THROWS_AS(place(*parse(demos::cont_text, v), v, DepthRegistry{}, CompositionMode::Transparent, 0),
                  UnregisteredSymbol);
}

TEST_CASE("per-node depth is the subtree maximum") {
  const auto v = demos::continuity_vocabulary();
  const auto e = parse("forall x in R . abs(x - 1) < 2", v);
  const auto p = place(*e, v, demos::continuity_registry(), CompositionMode::Transparent, 0);
  // pre-order: forall, <, abs, x, 1, 2
  CHECK(p.assignments.at(0) == Coordinate{5, 2, 0});
  CHECK(p.assignments.at(1) == Coordinate{4, 2, 0});
  CHECK(p.assignments.at(2) == Coordinate{4, 1, 0});
}

TEST_CASE("placement is deterministic") {
  const auto a = demos::cont_placement();
  const auto b = demos::cont_placement();
  CHECK(a.assignments == b.assignments);
  CHECK(report(placement_grid(a)) == report(placement_grid(b)));
}

TEST_CASE("report") {
  CHECK(report(Grid{}) == "depth\thierarchy\ttime\tlabels\n");
  StateCell a;
  a.id = 4;
  a.coord = {3, 2, 0};
  a.label = "second";
  a.content = content::GroundSet{"x"};
  StateCell b = a;
  b.id = 2;
  b.label = "first";
  CHECK(report(Grid{}.put(a).put(b)) == "depth\thierarchy\ttime\tlabels\n3\t2\t0\tfirst, second\n");

  const auto table = report(placement_grid(demos::cont_placement()));
  CHECK(std::count(table.begin(), table.end(), '\n') == 8);
}

TEST_CASE("placement grids satisfy the grid invariants") {
  CHECK(grid_violations(placement_grid(demos::cont_placement())).empty());
  CHECK(grid_violations(placement_grid(demos::int_placement())).empty());
}
