#include "doctest.h"

#include "sostar/cartan.hpp"
#include "sostar/errors.hpp"

#include <set>

using namespace sostar;

namespace {
const SimpleRoot b = SimpleRoot::fork();
const SimpleRoot a2 = SimpleRoot::chain(2);
const SimpleRoot a3 = SimpleRoot::chain(3);

std::set<std::string> formatted(const std::vector<Clan>& cs) {
  std::set<std::string> out;
  for (const auto& c : cs) out.insert(format_clan(c));
  return out;
}
} // namespace

TEST_CASE("root names") {
  CHECK(root_name(b) == "b");
  CHECK(root_name(SimpleRoot::chain(12)) == "a12");
  CHECK(parse_root("b") == b);
  CHECK(parse_root("a3") == a3);
  CHECK_THROWS_AS(parse_root("a1"), ParseError);
  CHECK_THROWS_AS(parse_root("c2"), ParseError);
  CHECK(simple_roots(1).empty());
  CHECK(simple_roots(3) == std::vector<SimpleRoot>{b, a2, a3});
  CHECK(adjacent(b, a3));
  CHECK(!adjacent(b, a2));
  CHECK(adjacent(a2, a3));
}

TEST_CASE("Cartan involution of a clan") {
  CHECK(theta_of_clan(parse_clan("1+;2-")).images == std::vector<int>{0, 1, 2});
  CHECK(theta_of_clan(parse_clan("(1,2)+")).images == std::vector<int>{0, 2, 1});
  CHECK(theta_of_clan(parse_clan("(1,2)-")).images == std::vector<int>{0, -1, -2});
  CHECK(theta_of_clan(parse_clan("2+;(1,3)-")).images == std::vector<int>{0, -3, 2, -1});
}

TEST_CASE("theta is an involution") {
  for (int n = 1; n <= 5; ++n)
    for_each_clan(n, ClanFilter::all, [&](const Clan& c) {
      const auto t = theta_of_clan(c).images;
      for (int i = 1; i <= n; ++i) {
        const int j = t[i];
        const int back = t[std::abs(j)] * (j > 0 ? 1 : -1);
        CHECK(back == i);
      }
    });
}

TEST_CASE("root status") {
  CHECK(root_status(parse_clan("1+;2+"), a2) == RootStatus::compact_imaginary);
  CHECK(root_status(parse_clan("1+;2+"), b) == RootStatus::noncompact_imaginary);
  CHECK(root_status(parse_clan("1+;(2,3)+"), a2) == RootStatus::complex_theta_positive);
  CHECK(root_status(parse_clan("1+;2-"), b) == RootStatus::compact_imaginary);
  CHECK(root_status(parse_clan("(1,2)+"), a2) == RootStatus::real);
  CHECK(root_status(parse_clan("(1,2)-"), b) == RootStatus::real);
  CHECK_THROWS_AS(root_status(parse_clan("1+;2+"), a3), DomainError);
}

TEST_CASE("tau-invariant of a clan") {
  CHECK(tau_invariant(parse_clan("1+;2+")) == std::vector<SimpleRoot>{a2});
  CHECK(tau_invariant(parse_clan("1+;2-")) == std::vector<SimpleRoot>{b});
  CHECK(tau_invariant(parse_clan("(1,2)-")) == std::vector<SimpleRoot>{b, a2});
  CHECK(tau_invariant(parse_clan("1+")).empty());
}

TEST_CASE("cross action") {
  CHECK(format_clan(cross_action(a2, parse_clan("1+;(2,3)+"))) == "2+;(1,3)+");
  CHECK(format_clan(cross_action(a2, parse_clan("1+;2-"))) == "1+;2-");
  // The fork root interchanges 1 and 2 and changes the signs carrying them.
  CHECK(format_clan(cross_action(b, parse_clan("1+;(2,3)+"))) == "2-;(1,3)-");
  CHECK(format_clan(cross_action(b, parse_clan("(1,3)+;(2,4)-"))) == "(2,3)-;(1,4)+");
  // When 1 and 2 are singletons or paired with each other, the fork action
  // is trivial like the interchange itself; in particular b is compact for
  // 1+;2- and must fix it.
  CHECK(format_clan(cross_action(b, parse_clan("1+;2-"))) == "1+;2-");
  CHECK(format_clan(cross_action(b, parse_clan("1+;2+;3+"))) == "1+;2+;3+");
  CHECK(format_clan(cross_action(b, parse_clan("(1,2)+"))) == "(1,2)+");
}

TEST_CASE("Cayley transforms") {
  CHECK(formatted(cayley(a2, parse_clan("1+;2-"))) == std::set<std::string>{"(1,2)+"});
  CHECK(formatted(cayley(b, parse_clan("1+;2+"))) == std::set<std::string>{"(1,2)-"});
  CHECK(formatted(cayley(a2, parse_clan("(1,2)+"))) == std::set<std::string>{"1+;2-", "1-;2+"});
  CHECK(formatted(cayley(b, parse_clan("(1,2)-"))) == std::set<std::string>{"1+;2+", "1-;2-"});
  CHECK(formatted(cayley(a3, parse_clan("1-;2+;3-"))) == std::set<std::string>{"1-;(2,3)+"});
  CHECK_THROWS_AS(cayley(a2, parse_clan("1+;2+")), DomainError);
  CHECK_THROWS_AS(cayley(a2, parse_clan("1+;(2,3)+")), DomainError);
  CHECK(!cayley_defined(parse_clan("1+;2+"), a2));
  CHECK(cayley_defined(parse_clan("1+;2+"), b));
}

TEST_CASE("cross action satisfies the type D relations") {
  for (int n = 2; n <= 4; ++n) {
    const auto roots = simple_roots(n);
    for_each_clan(n, ClanFilter::all, [&](const Clan& c) {
      for (auto x : roots) {
        CHECK(cross_action(x, cross_action(x, c)) == c);
        for (auto y : roots) {
          if (!(x < y)) continue;
          CAPTURE(format_clan(c));
          if (adjacent(x, y))
            CHECK(cross_action(x, cross_action(y, cross_action(x, c))) ==
                  cross_action(y, cross_action(x, cross_action(y, c))));
          else
            CHECK(cross_action(x, cross_action(y, c)) == cross_action(y, cross_action(x, c)));
        }
      }
    });
  }
}

TEST_CASE("cross actions and Cayley transforms preserve parity") {
  for (int n = 2; n <= 5; ++n)
    for_each_clan(n, ClanFilter::all, [&](const Clan& c) {
      for (auto r : simple_roots(n)) {
        CHECK(clan_parity(cross_action(r, c)) == clan_parity(c));
        if (cayley_defined(c, r))
          for (const auto& d : cayley(r, c)) CHECK(clan_parity(d) == clan_parity(c));
      }
    });
}

TEST_CASE("noncompact Cayley transforms are undone by the real ones") {
  for (int n = 2; n <= 5; ++n)
    for_each_clan(n, ClanFilter::all, [&](const Clan& c) {
      for (auto r : simple_roots(n)) {
        if (root_status(c, r) != RootStatus::noncompact_imaginary) continue;
        const auto up = cayley(r, c);
        REQUIRE(up.size() == 1);
        CHECK(root_status(up[0], r) == RootStatus::real);
        const auto down = cayley(r, up[0]);
        CHECK(std::find(down.begin(), down.end(), c) != down.end());
      }
    });
}
