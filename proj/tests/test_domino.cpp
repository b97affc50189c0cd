#include "doctest.h"

#include "sostar/domino.hpp"
#include "sostar/errors.hpp"
#include "support.hpp"

using namespace sostar;
using testing::rows_of;
using testing::tableau;

TEST_CASE("validation") {
  CHECK(validate_tableau(DominoTableau{}).empty());
  CHECK(is_valid_tableau(DominoTableau({{1, Domino::vertical(1, 1)}})));
  const DominoTableau gap({{1, Domino{{1, 1}, {1, 3}}}});
  CHECK(!validate_tableau(gap).empty());
  // Standardness: label 1 must come first.
  CHECK(!is_valid_tableau(DominoTableau({{2, Domino::horizontal(1, 1)}, {1, Domino::horizontal(2, 1)}})));
  CHECK(!is_valid_tableau(DominoTableau({{1, Domino::horizontal(2, 1)}})));
}

TEST_CASE("insertion") {
  const auto one = insert_domino(DominoTableau{}, 1, Orientation::horizontal_first_row);
  CHECK(rows_of(one) == "1 1");
  CHECK(rows_of(insert_domino(one, 2, Orientation::horizontal_first_row)) == "1 1 2 2");
  const DominoTableau two({{2, Domino::horizontal(1, 1)}});
  CHECK(rows_of(insert_domino(two, 1, Orientation::horizontal_first_row)) == "1 1/2 2");
  CHECK(rows_of(insert_domino(DominoTableau{}, 1, Orientation::vertical_first_column)) == "1/1");
  CHECK_THROWS_AS(insert_domino(one, 1, Orientation::horizontal_first_row), DomainError);
}

TEST_CASE("cycles of one domino") {
  const auto vertical = tableau("1/1");
  const auto cs = cycles(vertical);
  REQUIRE(cs.size() == 1);
  CHECK(cs[0].labels == std::vector<int>{1});
  CHECK(cs[0].kind == CycleKind::open);
  CHECK(*cs[0].hole == Square{2, 1});
  CHECK(*cs[0].corner == Square{1, 2});
  CHECK(rows_of(move_through(vertical, cs[0])) == "1 1");

  const auto horizontal = tableau("1 1");
  const auto hs = cycles(horizontal);
  REQUIRE(hs.size() == 1);
  CHECK(hs[0].kind == CycleKind::open);
  CHECK(*hs[0].hole == Square{1, 2});
  CHECK(*hs[0].corner == Square{2, 1});
  CHECK(move_through(horizontal, hs[0]) == vertical);

  CHECK(cycles(DominoTableau{}).empty());
}

TEST_CASE("a closed cycle keeps the shape") {
  const auto t = tableau("1 1 2 2/3 3 4 4");
  const auto c = cycle_of(t, 1);
  CHECK(c.kind == CycleKind::closed);
  CHECK(!c.hole);
  CHECK(!c.corner);
  const auto moved = move_through(t, c);
  CHECK(rows_of(moved) == "1 2 2 4/1 3 3 4");
  CHECK(moved.shape() == t.shape());
  CHECK(move_through(moved, cycle_of(moved, 1)) == t);
}

TEST_CASE("moving through a foreign cycle is an error") {
  const auto t = tableau("1 1 2 2/3 3 4 4");
  Cycle bogus = cycle_of(t, 1);
  bogus.labels = {1};
  CHECK_THROWS_AS(move_through(t, bogus), DomainError);
}

TEST_CASE("move-through is an involution on all small tableaux") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& t : standard_tableaux(n))
      for (const auto& c : cycles(t)) {
        const auto moved = move_through(t, c);
        CHECK(is_valid_tableau(moved));
        if (c.kind == CycleKind::closed) CHECK(moved.shape() == t.shape());
        else CHECK(moved.shape() != t.shape());
        CHECK(move_through(moved, cycle_of(moved, c.labels.front())) == t);
      }
}

TEST_CASE("tau-invariant of a tableau") {
  const auto b = SimpleRoot::fork();
  const auto a2 = SimpleRoot::chain(2);
  CHECK(tau_invariant_tableau(tableau("1 1/2 2")) == std::vector<SimpleRoot>{a2});
  CHECK(tau_invariant_tableau(tableau("1 2/1 2")) == std::vector<SimpleRoot>{b});
  CHECK(tau_invariant_tableau(tableau("1/1/2/2")) == std::vector<SimpleRoot>{b, a2});
}

TEST_CASE("vertical count") {
  CHECK(vertical_count(DominoTableau{}) == 0);
  CHECK(vertical_count(tableau("1 1/2 2")) == 0);
  CHECK(vertical_count(tableau("1 2/1 2")) == 2);
}

TEST_CASE("standard tableaux are counted by the involutions of type B") {
  const std::size_t expected[] = {1, 2, 6, 20, 76, 312};
  for (int n = 0; n <= 5; ++n) {
    const auto all = standard_tableaux(n);
    CHECK(all.size() == expected[n]);
    for (const auto& t : all) CHECK(is_valid_tableau(t));
  }
}
