#include "sostar/hmap.hpp"

#include "sostar/errors.hpp"

#include <algorithm>
#include <string>

namespace sostar {

std::vector<std::string> HState::violations() const {
  std::vector<std::string> out;
  for (auto& p : validate_tableau(t1)) out.push_back("domino tableau: " + p);
  if (t1.shape() != t2.shape) out.push_back("tableaux differ in shape");
  for (auto& p : t2.violations()) out.push_back("signed tableau: " + p);
  return out;
}

namespace {

void check_state(const HState& s, const char* where) {
  if (auto v = s.violations(); !v.empty())
    throw InvariantError(std::string(where) + ": " + v.front());
}

int double_row_count(const HState& s) { return s.t2.double_rows(); }
int length_of(const HState& s, int d) { return s.t2.shape.parts[2 * d - 2]; }
Sign end_of(const HState& s, int d) { return end_sign(s.t2, 2 * d - 1); }

void swap_double_row_signs(HState& s, int a, int b) {
  auto& sg = s.t2.start_signs;
  std::swap(sg[2 * a - 2], sg[2 * b - 2]);
  std::swap(sg[2 * a - 1], sg[2 * b - 1]);
}

// Resizes the signed tableau to the domino tableau's shape. Rows that are
// new receive + as start sign until the caller sets them.
void sync_shape(HState& s) {
  s.t2.shape = s.t1.shape();
  s.t2.start_signs.resize(s.t2.shape.parts.size(), Sign::plus);
}

// Appends sign eps to double row d and a vertical domino `label` to the end
// of that double row.
void extend_double_row(HState& s, int d, int label, Sign eps) {
  const int len = length_of(s, d);
  s.t1 = s.t1.with(label, Domino::vertical(2 * d - 1, len + 1));
  sync_shape(s);
  set_end_sign(s.t2, d, eps);
}

// Singleton insertion restricted to the double rows numbered `first` and
// below. Flips and interchanges of double rows restart the analysis at the
// same double row; an unusable even double row hands over to the highest
// strictly shorter one.
void place_singleton(HState& s, int label, Sign eps, int first) {
  int cur = first;
  const int bound = 4 * (double_row_count(s) + 2);
  for (int step = 0; step < bound; ++step) {
    const int m = double_row_count(s);
    if (cur > m) {
      s.t1 = s.t1.with(label, Domino::vertical(2 * m + 1, 1));
      sync_shape(s);
      s.t2.start_signs[2 * m] = eps;
      s.t2.start_signs[2 * m + 1] = eps;
      return;
    }
    const int len = length_of(s, cur);
    if (end_of(s, cur) == -eps) {
      extend_double_row(s, cur, label, eps);
      return;
    }
    int last_same = cur;
    while (last_same + 1 <= m && length_of(s, last_same + 1) == len) ++last_same;
    for (int d = cur + 1; d <= last_same; ++d) {
      if (end_of(s, d) == -eps) {
        swap_double_row_signs(s, cur, d);
        extend_double_row(s, cur, label, eps);
        return;
      }
    }
    if (len % 2 == 0) {
      cur = last_same + 1;
      continue;
    }
    if (last_same > cur) {
      s.t2 = flip_double_rows(s.t2, {cur, cur + 1});
      extend_double_row(s, cur, label, eps);
      return;
    }
    // Odd double row, ends in eps, unique of its length.
    const Square last{2 * cur, len};
    const int owner = s.t1.label_at(last);
    const Cycle c = cycle_of(s.t1, owner);
    if (c.kind != CycleKind::open || *c.hole != last)
      throw InvariantError("singleton insertion: cycle through the end of double row " +
                           std::to_string(cur) + " does not open there");
    const Square corner = *c.corner;
    if (corner.row > s.t1.shape().rows()) {
      s.t2 = flip_double_rows(s.t2, {cur});
      continue;
    }
    if (corner.row % 2 == 0)
      throw InvariantError("singleton insertion: cycle corner lies in a lower row");
    const int target = double_row_of(corner.row);
    if (target != cur) {
      s.t2 = flip_double_rows(s.t2, {cur, target});
      continue;
    }
    s.t1 = move_through(s.t1, c);
    s.t1 = s.t1.with(label, Domino::horizontal(2 * cur, len));
    sync_shape(s);
    set_end_sign(s.t2, cur, eps);
    return;
  }
  throw InvariantError("singleton insertion did not terminate");
}

int signed_balance(const SignedTableau& t) { return t.count(Sign::plus) - t.count(Sign::minus); }

} // namespace

HState insert_singleton(const HState& s, int i, Sign eps) {
  if (!s.t1.empty() && s.t1.dominoes().rbegin()->first >= i)
    throw DomainError("singleton label must exceed every label present");
  HState out = s;
  place_singleton(out, i, eps, 1);
  check_state(out, "insert_singleton");
  return out;
}

HState insert_pair(const HState& s, int i, int j, Sign eps) {
  if (i >= j) throw DomainError("pair requires i < j");
  if (s.t1.contains(i) || s.t1.contains(j)) throw DomainError("pair label already present");
  if (!s.t1.empty() && s.t1.dominoes().rbegin()->first >= j)
    throw DomainError("pair's larger label must exceed every label present");

  const Shape before = s.t1.shape();
  HState out = s;
  out.t1 = insert_domino(s.t1, i, eps == Sign::plus ? Orientation::horizontal_first_row
                                                   : Orientation::vertical_first_column);
  const Shape after = out.t1.shape();
  std::vector<Square> added;
  for (int r = 1; r <= after.rows(); ++r)
    for (int c = before.row_length(r) + 1; c <= after.row_length(r); ++c) added.push_back({r, c});
  if (added.size() != 2) throw InvariantError("insertion did not add exactly one domino");
  const Domino d = Domino::of(added[0], added[1]);
  if (d.first.row % 2 == 0) throw InvariantError("inserted domino starts in a lower row");
  const int r = double_row_of(d.first.row);
  const int ell = before.row_length(d.first.row);
  const bool new_double_row = d.first.row > before.rows();
  const int balance_before = signed_balance(s.t2);

  if (d.is_horizontal() && ell % 2 == 1) {
    // R stays odd. Its end sign is reversed: keeping it would send
    // 1+;(2,3)+;4+ (odd) to an all-horizontal tableau, against the vertical
    // count rule for parity on very even shapes.
    const Sign old_end = end_of(s, r);
    out.t1 = out.t1.with(j, Domino::horizontal(2 * r, ell + 1));
    sync_shape(out);
    set_end_sign(out.t2, r, -old_end);
    check_state(out, "insert_pair");
    return out;
  }

  if (d.is_horizontal()) {
    // Exactly one open cycle makes the shape doubled again.
    std::vector<Cycle> fixes;
    for (const auto& c : cycles(out.t1)) {
      if (c.kind != CycleKind::open) continue;
      if (move_through(out.t1, c).shape().is_doubled()) fixes.push_back(c);
    }
    if (fixes.size() != 1)
      throw InvariantError("pair insertion: expected one open cycle restoring a doubled shape, found " +
                           std::to_string(fixes.size()));
    const Sign old_end = new_double_row ? Sign::plus : end_of(s, r);
    out.t1 = move_through(out.t1, fixes.front());
    sync_shape(out);
    if (new_double_row) {
      out.t2.start_signs[2 * r - 2] = Sign::plus;
      out.t2.start_signs[2 * r - 1] = Sign::plus;
    } else {
      set_end_sign(out.t2, r, -old_end);
    }
  } else {
    const Sign old_end = new_double_row ? Sign::plus : end_of(s, r);
    sync_shape(out);
    if (new_double_row) {
      out.t2.start_signs[2 * r - 2] = Sign::plus;
      out.t2.start_signs[2 * r - 1] = Sign::plus;
    } else {
      set_end_sign(out.t2, r, old_end);
    }
  }
  const int delta = signed_balance(out.t2) - balance_before;
  if (delta != 2 && delta != -2)
    throw InvariantError("pair insertion: first step changed the sign balance by " +
                         std::to_string(delta));
  const bool gained_plus = delta == 2;
  const Sign j_sign = d.is_horizontal() ? (gained_plus ? Sign::minus : Sign::plus)
                                        : (gained_plus ? Sign::plus : Sign::minus);
  check_state(out, "insert_pair (first step)");
  place_singleton(out, j, j_sign, r + 1);
  check_state(out, "insert_pair");
  return out;
}

HState hmap_state(const Clan& c, const RepresentativeChooser& choose) {
  HState s;
  for (const auto& e : c.entries()) {
    if (choose) s.t2 = choose(s.t1, s.t2);
    s = e.is_pair() ? insert_pair(s, e.lo, e.hi, e.sign) : insert_singleton(s, e.lo, e.sign);
  }
  return s;
}

HPair hmap(const Clan& c) { return hmap(c, {}); }

HPair hmap(const Clan& c, const RepresentativeChooser& choose) {
  HState s = hmap_state(c, choose);
  return HPair{s.t1, canonicalize(s.t1, s.t2)};
}

std::vector<Clan> hmap_inverse(const HPair& p, int n, ClanFilter filter, int max_n) {
  if (n < 0 || n > max_n)
    throw DomainError("rank " + std::to_string(n) + " exceeds the search bound " +
                      std::to_string(max_n));
  if (p.t1.shape() != p.class2.representative.shape || p.class2.companion != p.t1)
    throw DomainError("pair components have mismatched shapes");
  std::vector<Clan> out;
  for_each_clan(n, filter, [&](const Clan& c) {
    if (hmap(c) == p) out.push_back(c);
  });
  return out;
}

} // namespace sostar
