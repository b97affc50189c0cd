#include "sostar/clan.hpp"

#include "sostar/errors.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace sostar {

Clan::Clan(int n, std::vector<Entry> entries) : n_(n), entries_(std::move(entries)) {
  if (n < 0) throw std::invalid_argument("clan rank must be nonnegative");
  slot_.assign(static_cast<std::size_t>(n) + 1, -1);
  for (auto& e : entries_) {
    if (e.lo > e.hi) std::swap(e.lo, e.hi);
    for (int i : {e.lo, e.hi}) {
      if (i < 1 || i > n)
        throw std::invalid_argument("clan index " + std::to_string(i) + " out of range 1.." +
                                    std::to_string(n));
    }
  }
  std::sort(entries_.begin(), entries_.end(),
            [](const Entry& a, const Entry& b) { return a.hi < b.hi; });
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    const auto& e = entries_[k];
    for (int i : {e.lo, e.hi}) {
      if (!e.is_pair() && i == e.hi && slot_[i] == static_cast<int>(k)) continue;
      if (slot_[i] != -1)
        throw std::invalid_argument("clan index " + std::to_string(i) + " occurs twice");
      slot_[i] = static_cast<int>(k);
    }
  }
  for (int i = 1; i <= n; ++i) {
    if (slot_[i] == -1)
      throw std::invalid_argument("clan index " + std::to_string(i) + " is missing");
  }
}

const Entry& Clan::entry_of(int i) const {
  if (i < 1 || i > n_) throw std::out_of_range("clan index out of range");
  return entries_[slot_[i]];
}

namespace {

class ClanParser {
public:
  explicit ClanParser(std::string_view text) : text_(text) {}

  std::vector<Entry> parse() {
    std::vector<Entry> out;
    if (text_.empty()) return out;
    for (;;) {
      out.push_back(item());
      if (pos_ == text_.size()) break;
      expect(';');
    }
    return out;
  }

private:
  Entry item() {
    if (peek() == '(') {
      ++pos_;
      const auto lo_pos = pos_;
      int a = integer();
      expect(',');
      int b = integer();
      expect(')');
      Sign s = sign();
      if (a >= b) throw ParseError("pair must satisfy lo < hi", lo_pos);
      return Entry::pair(a, b, s);
    }
    int a = integer();
    return Entry::singleton(a, sign());
  }

  int integer() {
    const auto start = pos_;
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw ParseError("expected integer", pos_);
    if (text_[pos_] == '0') throw ParseError("integers must be nonzero without leading zeros", pos_);
    long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 1'000'000) throw ParseError("integer too large", start);
      ++pos_;
    }
    return static_cast<int>(v);
  }

  Sign sign() {
    char c = peek();
    if (c == '+' || c == '-') {
      ++pos_;
      return c == '+' ? Sign::plus : Sign::minus;
    }
    throw ParseError("expected sign '+' or '-'", pos_);
  }

  void expect(char c) {
    if (peek() != c) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  std::string_view text_;
  std::size_t pos_ = 0;
};

int max_index(const std::vector<Entry>& entries) {
  int m = 0;
  for (const auto& e : entries) m = std::max(m, e.hi);
  return m;
}

} // namespace

Clan parse_clan(std::string_view text) {
  auto entries = ClanParser(text).parse();
  const int n = max_index(entries);
  return Clan(n, std::move(entries));
}

Clan parse_clan(std::string_view text, int n) {
  return Clan(n, ClanParser(text).parse());
}

std::string format_clan(const Clan& c) {
  std::string out;
  for (const auto& e : c.entries()) {
    if (!out.empty()) out += ';';
    if (e.is_pair())
      out += '(' + std::to_string(e.lo) + ',' + std::to_string(e.hi) + ')';
    else
      out += std::to_string(e.lo);
    out += to_char(e.sign);
  }
  return out;
}

Parity clan_parity(const Clan& c) {
  int plus_pairs = 0;
  int minus_singletons = 0;
  for (const auto& e : c.entries()) {
    if (e.is_pair() && e.sign == Sign::plus) ++plus_pairs;
    if (!e.is_pair() && e.sign == Sign::minus) ++minus_singletons;
  }
  return (plus_pairs - minus_singletons) % 2 == 0 ? Parity::even : Parity::odd;
}

bool matches(ClanFilter f, const Clan& c) {
  switch (f) {
  case ClanFilter::all: return true;
  case ClanFilter::even: return clan_parity(c) == Parity::even;
  case ClanFilter::odd: return clan_parity(c) == Parity::odd;
  }
  return false;
}

namespace {

// Builds involutions by deciding the fate of the smallest unused index.
void enumerate_rec(int n, std::vector<bool>& used, std::vector<Entry>& acc, ClanFilter filter,
                   const std::function<void(const Clan&)>& visit) {
  int i = 1;
  while (i <= n && used[i]) ++i;
  if (i > n) {
    Clan c(n, acc);
    if (matches(filter, c)) visit(c);
    return;
  }
  used[i] = true;
  for (Sign s : {Sign::plus, Sign::minus}) {
    acc.push_back(Entry::singleton(i, s));
    enumerate_rec(n, used, acc, filter, visit);
    acc.pop_back();
  }
  for (int j = i + 1; j <= n; ++j) {
    if (used[j]) continue;
    used[j] = true;
    for (Sign s : {Sign::plus, Sign::minus}) {
      acc.push_back(Entry::pair(i, j, s));
      enumerate_rec(n, used, acc, filter, visit);
      acc.pop_back();
    }
    used[j] = false;
  }
  used[i] = false;
}

} // namespace

void for_each_clan(int n, ClanFilter filter, const std::function<void(const Clan&)>& visit) {
  if (n < 0) throw std::invalid_argument("rank must be nonnegative");
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  std::vector<Entry> acc;
  enumerate_rec(n, used, acc, filter, visit);
}

std::vector<Clan> enumerate_clans(int n, ClanFilter filter) {
  std::vector<Clan> out;
  for_each_clan(n, filter, [&](const Clan& c) { out.push_back(c); });
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t clan_count(int n) {
  // sum over k pairs: C(n,2k) (2k-1)!! 2^(n-k)
  std::uint64_t total = 0;
  for (int k = 0; 2 * k <= n; ++k) {
    std::uint64_t binom = 1;
    for (int t = 0; t < 2 * k; ++t) binom = binom * static_cast<std::uint64_t>(n - t) / (t + 1);
    std::uint64_t dfact = 1;
    for (int t = 2 * k - 1; t > 1; t -= 2) dfact *= static_cast<std::uint64_t>(t);
    total += binom * dfact * (std::uint64_t{1} << (n - k));
  }
  return total;
}

Clan interchange(int i, int j, const Clan& c) {
  const int n = c.rank();
  if (i < 1 || j > n || i >= j)
    throw std::out_of_range("interchange requires 1 <= i < j <= n");
  const Entry& ei = c.entry_of(i);
  const Entry& ej = c.entry_of(j);
  const bool i_out = ei.is_pair() && ei.partner(i) != j;
  const bool j_out = ej.is_pair() && ej.partner(j) != i;
  if (!i_out && !j_out) return c;
  auto swap_index = [&](int k) { return k == i ? j : (k == j ? i : k); };
  std::vector<Entry> entries;
  entries.reserve(c.entries().size());
  for (const auto& e : c.entries()) {
    int a = swap_index(e.lo);
    int b = swap_index(e.hi);
    if (a > b) std::swap(a, b);
    entries.push_back({a, b, e.sign});
  }
  return Clan(n, std::move(entries));
}

} // namespace sostar
