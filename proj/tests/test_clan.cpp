#include "doctest.h"

#include "sostar/clan.hpp"
#include "sostar/errors.hpp"

#include <set>

using namespace sostar;

TEST_CASE("parse and format") {
  CHECK(parse_clan("").rank() == 0);
  CHECK(parse_clan("").entries().empty());
  CHECK(format_clan(parse_clan("")) == "");

  const Clan a = parse_clan("1+;2-");
  REQUIRE(a.entries().size() == 2);
  CHECK(a.entries()[0] == Entry::singleton(1, Sign::plus));
  CHECK(a.entries()[1] == Entry::singleton(2, Sign::minus));
  CHECK(format_clan(a) == "1+;2-");

  // Entries are ordered by their largest index.
  const Clan b = parse_clan("(1,3)+;2-");
  REQUIRE(b.entries().size() == 2);
  CHECK(b.entries()[0] == Entry::singleton(2, Sign::minus));
  CHECK(b.entries()[1] == Entry::pair(1, 3, Sign::plus));
  CHECK(format_clan(b) == "2-;(1,3)+");
  CHECK(parse_clan("2-;(1,3)+") == b);
}

TEST_CASE("malformed clans are rejected") {
  CHECK_THROWS_AS(parse_clan("1+;1-"), std::invalid_argument);
  CHECK_THROWS_AS(parse_clan("1+;3-"), std::invalid_argument);
  CHECK_THROWS_AS(parse_clan("1"), ParseError);
  CHECK_THROWS_AS(parse_clan("(2,1)+"), std::invalid_argument);
  CHECK_THROWS_AS(parse_clan("1+;;2-"), ParseError);
  CHECK_THROWS_AS(parse_clan("1*"), ParseError);
  CHECK_THROWS_AS(parse_clan("1+;2+", 3), std::invalid_argument);
}

TEST_CASE("parity") {
  CHECK(clan_parity(parse_clan("1+;2+")) == Parity::even);
  CHECK(clan_parity(parse_clan("(1,2)+")) == Parity::odd);
  CHECK(clan_parity(parse_clan("(1,2)-")) == Parity::even);
  CHECK(clan_parity(parse_clan("1-;2+")) == Parity::odd);
  CHECK(clan_parity(parse_clan("1-;(2,3)+")) == Parity::even);
}

TEST_CASE("enumeration at small rank") {
  std::set<std::string> one;
  for (const auto& c : enumerate_clans(1)) one.insert(format_clan(c));
  CHECK(one == std::set<std::string>{"1+", "1-"});

  CHECK(enumerate_clans(2).size() == 6);
  std::set<std::string> even;
  for (const auto& c : enumerate_clans(2, ClanFilter::even)) even.insert(format_clan(c));
  CHECK(even == std::set<std::string>{"1+;2+", "1-;2-", "(1,2)-"});
  CHECK(enumerate_clans(0).size() == 1);
}

TEST_CASE("enumeration counts match the closed form and split by parity") {
  const std::uint64_t expected[] = {1, 2, 6, 20, 76, 312, 1384};
  for (int n = 0; n <= 6; ++n) {
    CAPTURE(n);
    const auto all = enumerate_clans(n);
    CHECK(clan_count(n) == expected[n]);
    CHECK(all.size() == expected[n]);
    CHECK(std::set<Clan>(all.begin(), all.end()).size() == all.size());
    CHECK(enumerate_clans(n, ClanFilter::even).size() + enumerate_clans(n, ClanFilter::odd).size() == all.size());
  }
}

TEST_CASE("format and parse round trip") {
  for (int n = 1; n <= 6; ++n)
    for_each_clan(n, ClanFilter::all, [&](const Clan& c) {
      const auto text = format_clan(c);
      CHECK(parse_clan(text) == c);
      CHECK(parse_clan(text, n) == c);
    });
}

TEST_CASE("interchange") {
  CHECK(format_clan(interchange(1, 2, parse_clan("(1,3)+;2+"))) == "1+;(2,3)+");
  // Both singletons, or paired with each other: nothing moves.
  CHECK(format_clan(interchange(1, 2, parse_clan("1+;2-"))) == "1+;2-");
  CHECK(format_clan(interchange(1, 2, parse_clan("(1,2)+"))) == "(1,2)+");
  CHECK(format_clan(interchange(2, 3, parse_clan("(1,2)-;3+"))) == "2+;(1,3)-");
}

TEST_CASE("interchange is an involution") {
  for (int n = 2; n <= 5; ++n)
    for_each_clan(n, ClanFilter::all, [&](const Clan& c) {
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) CHECK(interchange(i, j, interchange(i, j, c)) == c);
    });
}
