#include "doctest.h"

#include "sostar/errors.hpp"
#include "sostar/hmap.hpp"
#include "sostar/wallcross.hpp"
#include "support.hpp"

#include <set>

using namespace sostar;
using testing::rows_of;
using testing::tableau;

namespace {
const SimpleRoot b = SimpleRoot::fork();
const SimpleRoot a2 = SimpleRoot::chain(2);
const SimpleRoot a3 = SimpleRoot::chain(3);
const Rank4Op down{Rank4Direction::D_to_beta};
const Rank4Op up{Rank4Direction::beta_to_D};

std::vector<std::string> formatted(const std::vector<Clan>& cs) {
  std::vector<std::string> out;
  for (const auto& c : cs) out.push_back(format_clan(c));
  return out;
}

std::vector<std::string> rendered(const std::vector<DominoTableau>& ts) {
  std::vector<std::string> out;
  for (const auto& t : ts) out.push_back(rows_of(t));
  return out;
}
} // namespace

TEST_CASE("operator names") {
  const auto spec = parse_operator("T:a2,a3");
  CHECK(!spec.rank4);
  CHECK(spec.rank2 == Rank2Op{a2, a3});
  CHECK(parse_operator("T:b,a3").rank2 == Rank2Op{b, a3});
  CHECK(parse_operator("T:D,b").rank4);
  CHECK(parse_operator("T:D,b").rank4_op == down);
  CHECK(parse_operator("T:b,D").rank4_op == up);
  CHECK(operator_name(Rank2Op{a3, b}) == "T:a3,b");
  CHECK(operator_name(up) == "T:b,D");
  CHECK_THROWS_AS(parse_operator("T:a2"), ParseError);
  CHECK_THROWS_AS(parse_operator("S:a2,a3"), ParseError);
  CHECK_THROWS_AS(validate(Rank2Op{b, a2}, 3), DomainError);
  CHECK_THROWS_AS(validate(Rank2Op{a3, SimpleRoot::chain(4)}, 3), DomainError);
}

TEST_CASE("rank 2 on clans") {
  CHECK(format_clan(rank2_clan({a2, a3}, parse_clan("1+;2+;3-"))) == "1+;(2,3)+");
  CHECK_THROWS_AS(rank2_clan({a2, a3}, parse_clan("1+;2-;3-")), DomainError);
  CHECK(format_clan(rank2_clan({a3, a2}, parse_clan("1+;(2,3)+"))) == "1+;2+;3-");
  CHECK(format_clan(rank2_clan({a3, a2}, parse_clan("1+;2-;3-"))) == "(1,2)+;3-");
  CHECK(format_clan(rank2_clan({b, a3}, parse_clan("1+;2-;3+"))) == "1+;(2,3)+");
  CHECK(format_clan(rank2_clan({a3, b}, parse_clan("1+;2+;3+"))) == "(1,2)-;3+");
}

TEST_CASE("rank 2 on tableaux") {
  CHECK(rows_of(rank2_tableau({a2, a3}, tableau("1 1 3/2 2 3"))) == "1 2 2/1 3 3");
  // Here exchanging the labels 2 and 3 is enough.
  CHECK(rows_of(rank2_tableau({a3, a2}, tableau("1 2/1 2/3/3"))) == "1 3/1 3/2/2");
  CHECK(rows_of(rank2_tableau({b, a3}, tableau("1 2 3/1 2 3"))) == "1 2 2/1 3 3");
  CHECK_THROWS_AS(rank2_tableau({a2, a3}, tableau("1 2 2/1 3 3")), DomainError);
}

TEST_CASE("rank 2 transport and inverse at rank 3") {
  for (const auto& op : {Rank2Op{a2, a3}, Rank2Op{a3, a2}, Rank2Op{b, a3}, Rank2Op{a3, b}})
    for_each_clan(3, ClanFilter::all, [&](const Clan& c) {
      if (!in_domain(op, c)) return;
      CAPTURE(format_clan(c));
      const auto d = rank2_clan(op, c);
      CHECK(clan_parity(d) == clan_parity(c));
      CHECK(rank2_clan(Rank2Op{op.beta, op.alpha}, d) == c);
      CHECK(rank2_tableau(op, hmap(c).t1) == hmap(d).t1);
    });
}

TEST_CASE("rank 4 types") {
  CHECK(rank4_type({a3, SimpleRoot::chain(4)}) == Rank4Type::A_beta);
  CHECK(rank4_type({a3}) == Rank4Type::D);
  CHECK(rank4_type({a3, SimpleRoot::chain(5)}) == Rank4Type::D);
  CHECK(rank4_type({b, a3}) == Rank4Type::neither);
}

TEST_CASE("rank 4 explicit exchange") {
  CHECK(closed_on_first_four(parse_clan("1+;3+;(2,4)+")));
  CHECK(!closed_on_first_four(parse_clan("(1,3)+;(2,5)+;4+")));
  CHECK(formatted(rank4_clan(down, parse_clan("1+;3+;(2,4)+"))) ==
        std::vector<std::string>{"(1,3)-;(2,4)+"});
  CHECK(formatted(rank4_clan(down, parse_clan("1+;3-;(2,4)+"))) ==
        std::vector<std::string>{"(1,3)+;(2,4)+"});
  CHECK(formatted(rank4_clan(up, parse_clan("(1,3)+;(2,4)+"))) ==
        std::vector<std::string>{"1-;3+;(2,4)+", "1+;3-;(2,4)+"});
  CHECK_THROWS_AS(rank4_clan(up, parse_clan("1+;3+;(2,4)+")), DomainError);
}

TEST_CASE("rank 4 on tableaux") {
  CHECK(rendered(rank4_tableau(down, tableau("1 2 2/1 3 3/4/4"))) ==
        std::vector<std::string>{"1 2 2/1 4 4/3/3"});
  // Both clans of a double image share their domino tableau.
  CHECK(rendered(rank4_tableau(up, tableau("1 2 2/1 4 4/3/3"))) ==
        std::vector<std::string>{"1 2 2/1 3 3/4/4"});
  CHECK_THROWS_AS(rank4_tableau(down, tableau("1 1/2 2/3/3")), DomainError);
}

TEST_CASE("rank 4 double image at rank 5") {
  const auto c = parse_clan("(1,3)+;(2,4)+;5+");
  const auto t = hmap(c).t1;
  CHECK(rows_of(t) == "1 2 2 5/1 4 4 5/3/3");
  CHECK(rendered(rank4_tableau(up, t)) ==
        std::vector<std::string>{"1 1 2 2/3 3 5 5/4/4", "1 2 2 5/1 3 3 5/4/4"});
  CHECK(formatted(rank4_clan(up, c)) ==
        std::vector<std::string>{"1-;3+;(2,4)+;5+", "1+;3-;(2,4)+;5+"});
}

TEST_CASE("rank 4 transport at rank 4 and 5") {
  for (int n = 4; n <= 5; ++n)
    for (const auto& op : {down, up})
      for_each_clan(n, ClanFilter::all, [&](const Clan& c) {
        if (!in_domain(op, c)) return;
        CAPTURE(format_clan(c));
        const auto images = rank4_clan(op, c);
        std::set<DominoTableau> via_clans;
        for (const auto& d : images) {
          CHECK(clan_parity(d) == clan_parity(c));
          via_clans.insert(hmap(d).t1);
        }
        const auto direct = rank4_tableau(op, hmap(c).t1);
        CHECK(via_clans == std::set<DominoTableau>(direct.begin(), direct.end()));
      });
}

TEST_CASE("cells") {
  const std::size_t counts[] = {1, 3, 4, 9, 12};
  for (int n = 1; n <= 5; ++n) {
    const auto part = cells(n);
    CAPTURE(n);
    CHECK(part.cells.size() == counts[n - 1]);
    for (const auto& cell : part.cells) {
      CHECK(cell.shapes.size() == 1);
      CHECK(cell.orbits.size() == 1);
    }
  }
  CHECK(cells(1).edges.empty());
  CHECK(cells(2).edges.empty());
  CHECK(cells(3).edges.size() == 12);
  CHECK_THROWS_AS(cells(7), DomainError);
}
