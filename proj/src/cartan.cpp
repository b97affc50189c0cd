#include "sostar/cartan.hpp"

#include "sostar/errors.hpp"

#include <cstdlib>
#include <stdexcept>

namespace sostar {

std::vector<SimpleRoot> simple_roots(int n) {
  std::vector<SimpleRoot> out;
  if (n < 2) return out;
  out.push_back(SimpleRoot::fork());
  for (int i = 2; i <= n; ++i) out.push_back(SimpleRoot::chain(i));
  return out;
}

std::string root_name(SimpleRoot r) {
  return r.is_fork() ? std::string("b") : "a" + std::to_string(r.index());
}

SimpleRoot parse_root(std::string_view text) {
  if (text == "b") return SimpleRoot::fork();
  if (text.size() >= 2 && text[0] == 'a') {
    int v = 0;
    for (std::size_t k = 1; k < text.size(); ++k) {
      char ch = text[k];
      if (ch < '0' || ch > '9' || (k == 1 && ch == '0')) throw ParseError("bad root name", k);
      v = v * 10 + (ch - '0');
      if (v > 1'000'000) throw ParseError("root index too large", k);
    }
    if (v >= 2) return SimpleRoot::chain(v);
  }
  throw ParseError("expected root 'b' or 'a<i>' with i >= 2", 0);
}

bool adjacent(SimpleRoot a, SimpleRoot b) {
  if (a == b) return false;
  if (a.is_fork() || b.is_fork()) {
    const SimpleRoot other = a.is_fork() ? b : a;
    return other.index() == 3;
  }
  return std::abs(a.index() - b.index()) == 1;
}

std::string to_string(RootStatus s) {
  switch (s) {
  case RootStatus::compact_imaginary: return "compact_imaginary";
  case RootStatus::noncompact_imaginary: return "noncompact_imaginary";
  case RootStatus::real: return "real";
  case RootStatus::complex_theta_positive: return "complex_theta_positive";
  case RootStatus::complex_theta_negative: return "complex_theta_negative";
  }
  return "?";
}

CartanInvolution theta_of_clan(const Clan& c) {
  CartanInvolution t;
  t.images.assign(static_cast<std::size_t>(c.rank()) + 1, 0);
  for (const auto& e : c.entries()) {
    if (!e.is_pair()) {
      t.images[e.lo] = e.lo;
    } else if (e.sign == Sign::plus) {
      t.images[e.lo] = e.hi;
      t.images[e.hi] = e.lo;
    } else if (e.hi - e.lo == 1) {
      t.images[e.lo] = -e.lo;
      t.images[e.hi] = -e.hi;
    } else {
      t.images[e.lo] = -e.hi;
      t.images[e.hi] = -e.lo;
    }
  }
  return t;
}

namespace {

void check_root(const Clan& c, SimpleRoot r) {
  if (!r.valid_for(c.rank()))
    throw DomainError("root " + root_name(r) + " is not a simple root in rank " +
                      std::to_string(c.rank()));
}

// Sign of theta applied to e_hi + s*e_lo, judged by the coefficient of the
// largest coordinate in the image.
bool theta_image_positive(const Clan& c, int hi, int lo, int s) {
  const auto t = theta_of_clan(c);
  const int a = t.images[hi];
  const int b = t.images[lo];
  const int ca = a > 0 ? 1 : -1;
  const int cb = (b > 0 ? 1 : -1) * s;
  const int ia = std::abs(a);
  const int ib = std::abs(b);
  if (ia == ib) throw InvariantError("theta image of a complex root is not a root");
  return (ia > ib ? ca : cb) > 0;
}

} // namespace

RootStatus root_status(const Clan& c, SimpleRoot r) {
  check_root(c, r);
  const int hi = r.is_fork() ? 2 : r.index();
  const int lo = hi - 1;
  const Entry& a = c.entry_of(lo);
  const Entry& b = c.entry_of(hi);
  const bool both_single = !a.is_pair() && !b.is_pair();
  const bool paired_together = a.is_pair() && a.partner(lo) == hi;
  if (r.is_fork()) {
    if (both_single) {
      return a.sign == b.sign ? RootStatus::noncompact_imaginary : RootStatus::compact_imaginary;
    }
    if (paired_together) {
      return a.sign == Sign::plus ? RootStatus::compact_imaginary : RootStatus::real;
    }
    return theta_image_positive(c, hi, lo, +1) ? RootStatus::complex_theta_positive
                                                : RootStatus::complex_theta_negative;
  }
  if (both_single) {
    return a.sign == b.sign ? RootStatus::compact_imaginary : RootStatus::noncompact_imaginary;
  }
  if (paired_together) {
    return a.sign == Sign::minus ? RootStatus::compact_imaginary : RootStatus::real;
  }
  return theta_image_positive(c, hi, lo, -1) ? RootStatus::complex_theta_positive
                                              : RootStatus::complex_theta_negative;
}

bool in_tau(const Clan& c, SimpleRoot r) {
  switch (root_status(c, r)) {
  case RootStatus::compact_imaginary:
  case RootStatus::real:
  case RootStatus::complex_theta_negative: return true;
  default: return false;
  }
}

std::vector<SimpleRoot> tau_invariant(const Clan& c) {
  std::vector<SimpleRoot> out;
  for (auto r : simple_roots(c.rank()))
    if (in_tau(c, r)) out.push_back(r);
  return out;
}

Clan cross_action(SimpleRoot r, const Clan& c) {
  check_root(c, r);
  if (!r.is_fork()) return interchange(r.index() - 1, r.index(), c);
  // The proviso of the interchange covers the sign change too. If 1 and 2
  // are singletons, or paired with each other, the clan is fixed; otherwise
  // 1+;2-;3+ would move under a compact root and the braid relation with a3
  // would fail.
  const Entry& one = c.entry_of(1);
  const Entry& two = c.entry_of(2);
  if ((!one.is_pair() || one.partner(1) == 2) && (!two.is_pair() || two.partner(2) == 1)) return c;
  const Clan swapped = interchange(1, 2, c);
  std::vector<Entry> entries = swapped.entries();
  // One sign change per index, so the clan keeps its parity.
  for (auto& e : entries) {
    if (e.contains(1)) e.sign = -e.sign;
    if (e.contains(2)) e.sign = -e.sign;
  }
  return Clan(c.rank(), std::move(entries));
}

bool cayley_defined(const Clan& c, SimpleRoot r) {
  const auto s = root_status(c, r);
  return s == RootStatus::noncompact_imaginary || s == RootStatus::real;
}

std::vector<Clan> cayley(SimpleRoot r, const Clan& c) {
  const auto status = root_status(c, r);
  if (status != RootStatus::noncompact_imaginary && status != RootStatus::real)
    throw DomainError("root " + root_name(r) + " is not noncompact imaginary or real (it is " +
                      to_string(status) + ")");
  const int hi = r.is_fork() ? 2 : r.index();
  const int lo = hi - 1;
  std::vector<Entry> rest;
  for (const auto& e : c.entries())
    if (!e.contains(lo) && !e.contains(hi)) rest.push_back(e);

  auto with = [&](std::initializer_list<Entry> extra) {
    auto entries = rest;
    entries.insert(entries.end(), extra);
    return Clan(c.rank(), std::move(entries));
  };
  const Sign pair_sign = r.is_fork() ? Sign::minus : Sign::plus;
  if (status == RootStatus::noncompact_imaginary) return {with({Entry::pair(lo, hi, pair_sign)})};
  if (r.is_fork()) {
    return {with({Entry::singleton(lo, Sign::plus), Entry::singleton(hi, Sign::plus)}),
            with({Entry::singleton(lo, Sign::minus), Entry::singleton(hi, Sign::minus)})};
  }
  return {with({Entry::singleton(lo, Sign::plus), Entry::singleton(hi, Sign::minus)}),
          with({Entry::singleton(lo, Sign::minus), Entry::singleton(hi, Sign::plus)})};
}

} // namespace sostar
