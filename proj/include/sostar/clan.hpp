#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace sostar {

enum class Sign : std::int8_t { plus = 1, minus = -1 };

constexpr Sign operator-(Sign s) noexcept {
  return s == Sign::plus ? Sign::minus : Sign::plus;
}
constexpr Sign operator*(Sign a, Sign b) noexcept {
  return a == b ? Sign::plus : Sign::minus;
}
constexpr char to_char(Sign s) noexcept { return s == Sign::plus ? '+' : '-'; }

enum class Parity { even, odd };
enum class ClanFilter { all, even, odd };

/// One term of a clan: a signed singleton (lo == hi) or a signed pair lo < hi.
struct Entry {
  int lo = 0;
  int hi = 0;
  Sign sign = Sign::plus;

  static constexpr Entry singleton(int i, Sign s) { return {i, i, s}; }
  static constexpr Entry pair(int i, int j, Sign s) { return {i, j, s}; }

  constexpr bool is_pair() const noexcept { return lo != hi; }
  constexpr bool contains(int i) const noexcept { return lo == i || hi == i; }
  /// The other index of a pair, or i itself for a singleton.
  constexpr int partner(int i) const noexcept { return i == lo ? hi : lo; }

  friend constexpr bool operator==(const Entry&, const Entry&) = default;
  friend constexpr auto operator<=>(const Entry&, const Entry&) = default;
};

/// A signed involution of {1..n}, stored as singletons and pairs sorted by
/// their largest index. Construction validates and canonicalizes, so two
/// clans are equal exactly when they denote the same signed involution.
class Clan {
public:
  Clan() = default;
  /// Throws std::invalid_argument unless every index 1..n occurs exactly once.
  Clan(int n, std::vector<Entry> entries);

  int rank() const noexcept { return n_; }
  const std::vector<Entry>& entries() const noexcept { return entries_; }

  /// The entry containing index i (1-based).
  const Entry& entry_of(int i) const;
  bool is_singleton(int i) const { return !entry_of(i).is_pair(); }

  friend bool operator==(const Clan&, const Clan&) = default;
  friend auto operator<=>(const Clan& a, const Clan& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.entries_ <=> b.entries_;
  }

private:
  int n_ = 0;
  std::vector<Entry> entries_;
  std::vector<int> slot_; // index -> position in entries_
};

Clan parse_clan(std::string_view text);
/// Parses with an explicit rank; indices must cover 1..n exactly.
Clan parse_clan(std::string_view text, int n);
std::string format_clan(const Clan& c);

Parity clan_parity(const Clan& c);
bool matches(ClanFilter f, const Clan& c);

/// Calls visit once for every clan of rank n passing the filter, in a fixed
/// deterministic order.
void for_each_clan(int n, ClanFilter filter, const std::function<void(const Clan&)>& visit);
std::vector<Clan> enumerate_clans(int n, ClanFilter filter = ClanFilter::all);
/// Closed-form count of all clans of rank n.
std::uint64_t clan_count(int n);

/// Swaps the occurrences of i and j when at least one of them is paired with
/// an index outside {i, j}; otherwise returns c unchanged.
Clan interchange(int i, int j, const Clan& c);

} // namespace sostar
