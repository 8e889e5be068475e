#include <doctest.h>

#include "stategrid/error.hpp"
#include "stategrid/grid.hpp"
#include "stategrid/trivalue.hpp"

#include <algorithm>

using namespace stategrid;

constexpr auto F = TriValue::False;
constexpr auto T = TriValue::True;
constexpr auto U = TriValue::Undefinable;

TEST_CASE("kleene tables") {
  CHECK(and3(T, U) == U);
  CHECK(and3(F, U) == F);
  CHECK(or3(T, U) == T);
  CHECK(or3(F, U) == U);
  CHECK(not3(U) == U);
  CHECK(implies3(F, U) == T);
  CHECK(implies3(U, T) == T);
  CHECK(implies3(T, U) == U);
  for (auto a : all_trivalues)
    for (auto b : all_trivalues) CHECK(implies3(a, b) == or3(not3(a), b));
}

TEST_CASE("information order") {
  CHECK(info_leq(U, T));
  CHECK(info_leq(U, F));
  CHECK_FALSE(info_leq(T, F));
  CHECK(info_leq(F, F));
  CHECK_FALSE(info_leq(T, U));
}

TEST_CASE("projections and names") {
  CHECK(definable(T));
  CHECK_FALSE(definable(U));
  CHECK(lift(true) == T);
  for (auto v : all_trivalues) CHECK(trivalue_from_string(to_string(v)) == v);
  CHECK_THROWS_AS(trivalue_from_string("maybe"), std::invalid_argument);
}

namespace {

StateCell ground(CellId id, Coordinate c, std::string name = "R") {
  StateCell cell;
  cell.id = id;
  cell.coord = c;
  cell.label = name;
  cell.content = content::GroundSet{std::move(name)};
  return cell;
}

} // namespace

TEST_CASE("grid put and at") {
  Grid g;
  CHECK(grid_at(g, {5, 3, 0}).empty());
  g = grid_put(g, ground(1, {3, 2, 0}));
  g = grid_put(g, ground(2, {3, 2, 0}));
  const auto cells = grid_at(g, {3, 2, 0});
  REQUIRE(cells.size() == 2);
  CHECK(cells[0].id == 1);
  CHECK(cells[1].id == 2);
  CHECK_THROWS_AS(grid_put(g, ground(1, {0, 0, 0})), DuplicateCell);
  CHECK(g.next_id() == 3);
}

TEST_CASE("grid values are persistent") {
  const Grid empty;
  const Grid one = empty.put(ground(7, {1, 0, 0}));
  CHECK(empty.cells().empty());
  CHECK(one.find(7) != nullptr);
  const Grid moved = one.replace(ground(7, {2, 0, 0}));
  CHECK(one.at({1, 0, 0}).size() == 1);
  CHECK(moved.at({1, 0, 0}).empty());
  CHECK(moved.at({2, 0, 0}).size() == 1);
  CHECK(moved.erase(7).cells().empty());
}

TEST_CASE("cell invariants") {
  StateCell truth;
  truth.id = 1;
  truth.coord = {2, 0, 0};
  truth.content = content::TruthResult{T};
  CHECK_THROWS_AS(validate_cell(truth), InvalidCell);
  truth.coord = {1, 0, 0};
  CHECK_NOTHROW(validate_cell(truth));
  truth.definability = F;
  CHECK_THROWS_AS(validate_cell(truth), InvalidCell);

  auto g = ground(2, {5, 0, 0});
  g.tags.insert(std::string(structure_tag));
  CHECK_THROWS_AS(validate_cell(g), InvalidCell);
}

TEST_CASE("mapping declarations need a lower-order domain") {
  StateCell map;
  map.id = 2;
  map.coord = {5, 1, 0};
  map.content = content::MappingDecl{"f", 1};
  Grid g = Grid{}.put(map);
  CHECK(grid_violations(g).size() == 1);
  g = g.put(ground(1, {5, 0, 0}));
  CHECK(grid_violations(g).empty());
  // a domain in another time slice does not count
  CHECK(grid_violations(Grid{}.put(map).put(ground(1, {5, 0, 1}))).size() == 1);
}

TEST_CASE("coordinate order") {
  CHECK(Coordinate{1, 5, 9} < Coordinate{2, 0, 0});
  CHECK(Coordinate{1, 0, 3} < Coordinate{1, 1, 0});
  CHECK(to_string(Coordinate{5, 3, 0}) == "(5,3,0)");
}
