#include "sostar/domino.hpp"

#include "sostar/errors.hpp"

#include <algorithm>
#include <climits>
#include <numeric>
#include <set>
#include <sstream>

namespace sostar {

int Shape::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

bool Shape::is_doubled() const {
  if (parts.size() % 2 != 0) return false;
  for (std::size_t k = 0; k < parts.size(); k += 2)
    if (parts[k] != parts[k + 1]) return false;
  return true;
}

bool Shape::all_even() const {
  return std::all_of(parts.begin(), parts.end(), [](int p) { return p % 2 == 0; });
}

const Domino& DominoTableau::domino(int label) const {
  auto it = placement_.find(label);
  if (it == placement_.end())
    throw std::out_of_range("no domino labelled " + std::to_string(label));
  return it->second;
}

Shape DominoTableau::shape() const {
  std::vector<int> len;
  for (const auto& [label, d] : placement_) {
    for (Square s : {d.first, d.second}) {
      if (static_cast<int>(len.size()) < s.row) len.resize(s.row, 0);
      len[s.row - 1] = std::max(len[s.row - 1], s.col);
    }
  }
  return Shape{std::move(len)};
}

int DominoTableau::label_at(Square s) const {
  for (const auto& [label, d] : placement_)
    if (d.contains(s)) return label;
  return 0;
}

DominoTableau DominoTableau::with(int label, const Domino& d) const {
  auto p = placement_;
  p[label] = d;
  return DominoTableau(std::move(p));
}

DominoTableau DominoTableau::without(int label) const {
  auto p = placement_;
  p.erase(label);
  return DominoTableau(std::move(p));
}

DominoTableau DominoTableau::restricted(int max_label) const {
  std::map<int, Domino> p;
  for (const auto& [label, d] : placement_)
    if (label <= max_label) p.emplace(label, d);
  return DominoTableau(std::move(p));
}

DominoTableau DominoTableau::swap_labels(int a, int b) const {
  auto p = placement_;
  auto ia = p.find(a);
  auto ib = p.find(b);
  if (ia == p.end() || ib == p.end()) throw std::out_of_range("swap_labels: missing label");
  std::swap(ia->second, ib->second);
  return DominoTableau(std::move(p));
}

namespace {

// Dense label lookup. Squares above row 1 or left of column 1 read as 0 and
// unoccupied squares inside the quadrant read as INT_MAX, so that the
// boundary behaves like arbitrarily small labels and the exterior like
// arbitrarily large ones.
class Grid {
public:
  explicit Grid(const DominoTableau& t) {
    for (const auto& [label, d] : t.dominoes()) {
      for (Square s : {d.first, d.second}) {
        rows_ = std::max(rows_, s.row);
        cols_ = std::max(cols_, s.col);
      }
    }
    cells_.assign(static_cast<std::size_t>(rows_ + 1) * (cols_ + 1), 0);
    for (const auto& [label, d] : t.dominoes()) {
      for (Square s : {d.first, d.second}) cell(s.row, s.col) = label;
    }
  }

  int at(int r, int c) const {
    if (r < 1 || c < 1) return 0;
    if (r > rows_ || c > cols_) return INT_MAX;
    const int v = cells_[static_cast<std::size_t>(r) * (cols_ + 1) + c];
    return v == 0 ? INT_MAX : v;
  }

  bool occupied(int r, int c) const {
    return r >= 1 && c >= 1 && r <= rows_ && c <= cols_ &&
           cells_[static_cast<std::size_t>(r) * (cols_ + 1) + c] != 0;
  }

private:
  int& cell(int r, int c) { return cells_[static_cast<std::size_t>(r) * (cols_ + 1) + c]; }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<int> cells_;
};

bool adjacent_squares(Square a, Square b) {
  return (a.row == b.row && std::abs(a.col - b.col) == 1) ||
         (a.col == b.col && std::abs(a.row - b.row) == 1);
}

} // namespace

std::vector<std::string> validate_tableau(const DominoTableau& t) {
  std::vector<std::string> problems;
  std::map<Square, int> owner;
  for (const auto& [label, d] : t.dominoes()) {
    const std::string tag = "domino " + std::to_string(label) + ": ";
    if (label < 1) problems.push_back(tag + "label must be positive");
    if (d.first.row < 1 || d.first.col < 1 || d.second.row < 1 || d.second.col < 1)
      problems.push_back(tag + "square outside the first quadrant");
    if (!adjacent_squares(d.first, d.second)) problems.push_back(tag + "squares not adjacent");
    if (!(d.first < d.second)) problems.push_back(tag + "squares not in row-major order");
    for (Square s : {d.first, d.second}) {
      auto [it, inserted] = owner.emplace(s, label);
      if (!inserted && it->second != label)
        problems.push_back(tag + "overlaps domino " + std::to_string(it->second));
    }
  }
  for (const auto& [s, label] : owner) {
    const std::string tag = "domino " + std::to_string(label) + ": ";
    for (Square nb : {Square{s.row - 1, s.col}, Square{s.row, s.col - 1}}) {
      if (nb.row < 1 || nb.col < 1) continue;
      auto it = owner.find(nb);
      if (it == owner.end()) {
        problems.push_back(tag + "occupied region is not a Young diagram");
      } else if (it->second > label) {
        problems.push_back(tag + "lies below or right of larger label " +
                           std::to_string(it->second));
      }
    }
  }
  return problems;
}

bool is_valid_tableau(const DominoTableau& t) { return validate_tableau(t).empty(); }

namespace {

// Adds label k in every way that keeps the occupied region a Young diagram.
void grow(const DominoTableau& t, int k, int n, std::vector<DominoTableau>& out) {
  if (k > n) {
    out.push_back(t);
    return;
  }
  const Shape s = t.shape();
  for (int r = 1; r <= s.rows() + 1; ++r) {
    const int len = s.row_length(r);
    if (r == 1 || s.row_length(r - 1) >= len + 2) grow(t.with(k, Domino::horizontal(r, len + 1)), k + 1, n, out);
    if (s.row_length(r + 1) == len && (r == 1 || s.row_length(r - 1) > len))
      grow(t.with(k, Domino::vertical(r, len + 1)), k + 1, n, out);
  }
}

} // namespace

std::vector<DominoTableau> standard_tableaux(int n) {
  if (n < 0) throw DomainError("negative tableau size");
  std::vector<DominoTableau> out;
  grow(DominoTableau{}, 1, n, out);
  std::sort(out.begin(), out.end());
  return out;
}

DominoTableau insert_domino(const DominoTableau& t, int label, Orientation o) {
  if (t.contains(label))
    throw DomainError("label " + std::to_string(label) + " already present in tableau");
  std::set<Square> occupied;
  std::map<int, Domino> out;
  for (const auto& [l, d] : t.dominoes()) {
    if (l > label) break;
    out.emplace(l, d);
    occupied.insert(d.first);
    occupied.insert(d.second);
  }
  auto row_length = [&](int r) {
    int c = 0;
    while (occupied.count({r, c + 1})) ++c;
    return c;
  };
  auto col_length = [&](int c) {
    int r = 0;
    while (occupied.count({r + 1, c})) ++r;
    return r;
  };
  auto place = [&](int l, const Domino& d) {
    out[l] = d;
    occupied.insert(d.first);
    occupied.insert(d.second);
  };

  // The two squares by which the growing tableau exceeds the original one
  // restricted to the labels processed so far.
  Domino extra = o == Orientation::horizontal_first_row
                     ? Domino::horizontal(1, row_length(1) + 1)
                     : Domino::vertical(col_length(1) + 1, 1);
  place(label, extra);

  for (auto it = t.dominoes().upper_bound(label); it != t.dominoes().end(); ++it) {
    const auto& [l, d] = *it;
    const bool a = extra.contains(d.first);
    const bool b = extra.contains(d.second);
    if (!a && !b) {
      place(l, d);
    } else if (a && b) {
      Domino bumped = d.is_horizontal()
                          ? Domino::horizontal(d.first.row + 1, row_length(d.first.row + 1) + 1)
                          : Domino::vertical(col_length(d.first.col + 1) + 1, d.first.col + 1);
      place(l, bumped);
      extra = bumped;
    } else {
      // d and extra form an L inside a 2x2 box; x completes the box.
      const Square kept = a ? d.second : d.first;
      const Square shared = a ? d.first : d.second;
      const Square other = extra.first == shared ? extra.second : extra.first;
      const int r0 = std::min({kept.row, shared.row, other.row});
      const int c0 = std::min({kept.col, shared.col, other.col});
      Square x{};
      for (Square s : {Square{r0, c0}, Square{r0, c0 + 1}, Square{r0 + 1, c0}, Square{r0 + 1, c0 + 1}})
        if (s != kept && s != shared && s != other) x = s;
      place(l, Domino::of(kept, x));
      extra = Domino::of(other, x);
    }
  }
  DominoTableau result(std::move(out));
  if (auto problems = validate_tableau(result); !problems.empty())
    throw InvariantError("domino insertion produced an invalid tableau: " + problems.front());
  return result;
}

bool is_fixed(Square s, Coloring c) {
  const bool even = (s.row + s.col) % 2 == 0;
  return c == Coloring::A ? even : !even;
}

bool Cycle::contains(int label) const {
  return std::binary_search(labels.begin(), labels.end(), label);
}

namespace {

Domino moved(const Grid& g, int k, const Domino& d, Coloring coloring) {
  const int i = d.first.row;
  const int j = d.first.col;
  const bool first_fixed = is_fixed(d.first, coloring);
  if (d.is_vertical()) {
    if (first_fixed) {
      return k > g.at(i - 1, j + 1) ? Domino::horizontal(i, j) : Domino::vertical(i - 1, j);
    }
    return k < g.at(i + 2, j - 1) ? Domino::horizontal(i + 1, j - 1) : Domino::vertical(i + 1, j);
  }
  if (first_fixed) {
    return k > g.at(i + 1, j - 1) ? Domino::vertical(i, j) : Domino::horizontal(i, j - 1);
  }
  return k < g.at(i - 1, j + 2) ? Domino::vertical(i - 1, j + 1) : Domino::horizontal(i, j + 1);
}

struct UnionFind {
  std::map<int, int> parent;
  int find(int x) {
    auto it = parent.find(x);
    if (it->second == x) return x;
    return it->second = find(it->second);
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

Cycle classify(const DominoTableau& t, const std::map<int, Domino>& alt, std::vector<int> labels,
               Coloring coloring) {
  std::set<Square> before;
  std::set<Square> after;
  for (int l : labels) {
    const Domino& d = t.domino(l);
    before.insert({d.first, d.second});
    const Domino& m = alt.at(l);
    after.insert({m.first, m.second});
  }
  std::vector<Square> removed;
  std::vector<Square> added;
  std::set_difference(before.begin(), before.end(), after.begin(), after.end(),
                      std::back_inserter(removed));
  std::set_difference(after.begin(), after.end(), before.begin(), before.end(),
                      std::back_inserter(added));
  Cycle c;
  c.labels = std::move(labels);
  c.coloring = coloring;
  if (removed.empty() && added.empty()) {
    c.kind = CycleKind::closed;
  } else if (removed.size() == 1 && added.size() == 1) {
    c.kind = CycleKind::open;
    c.hole = removed.front();
    c.corner = added.front();
  } else {
    throw InvariantError("cycle changes the shape by more than one square");
  }
  return c;
}

} // namespace

Domino moved_position(const DominoTableau& t, int label, Coloring coloring) {
  return moved(Grid(t), label, t.domino(label), coloring);
}

std::vector<Cycle> cycles(const DominoTableau& t, Coloring coloring) {
  const Grid g(t);
  std::map<int, Domino> alt;
  UnionFind uf;
  for (const auto& [l, d] : t.dominoes()) {
    alt.emplace(l, moved(g, l, d, coloring));
    uf.parent[l] = l;
  }
  // Labels are linked when one domino's alternate position meets another's
  // current position.
  for (const auto& [l, m] : alt) {
    for (Square s : {m.first, m.second}) {
      if (!g.occupied(s.row, s.col)) continue;
      const int other = g.at(s.row, s.col);
      if (other != l) uf.unite(l, other);
    }
  }
  std::map<int, std::vector<int>> groups;
  for (const auto& [l, d] : t.dominoes()) groups[uf.find(l)].push_back(l);
  std::vector<Cycle> out;
  for (auto& [root, labels] : groups) out.push_back(classify(t, alt, std::move(labels), coloring));
  std::sort(out.begin(), out.end(),
            [](const Cycle& a, const Cycle& b) { return a.labels.front() < b.labels.front(); });
  return out;
}

Cycle cycle_of(const DominoTableau& t, int label, Coloring coloring) {
  for (auto& c : cycles(t, coloring))
    if (c.contains(label)) return c;
  throw DomainError("no domino labelled " + std::to_string(label));
}

DominoTableau move_through(const DominoTableau& t, const Cycle& c) {
  if (c.labels.empty() || !t.contains(c.labels.front()))
    throw DomainError("cycle does not belong to the tableau");
  const Cycle actual = cycle_of(t, c.labels.front(), c.coloring);
  if (actual.labels != c.labels) throw DomainError("cycle does not belong to the tableau");
  const Grid g(t);
  auto p = t.dominoes();
  for (int l : c.labels) p[l] = moved(g, l, t.domino(l), c.coloring);
  DominoTableau result(std::move(p));
  if (auto problems = validate_tableau(result); !problems.empty())
    throw InvariantError("moving through a cycle produced an invalid tableau: " + problems.front());
  return result;
}

bool in_tau(const DominoTableau& t, SimpleRoot r) {
  if (r.is_fork()) {
    const Domino& d = t.domino(2);
    return d.is_vertical() && d.first.col <= 2;
  }
  return t.domino(r.index()).first.row > t.domino(r.index() - 1).first.row;
}

std::vector<SimpleRoot> tau_invariant_tableau(const DominoTableau& t) {
  const int n = t.size();
  for (int k = 1; k <= n; ++k)
    if (!t.contains(k)) throw DomainError("tableau labels must be 1..n");
  std::vector<SimpleRoot> out;
  for (auto r : simple_roots(n))
    if (in_tau(t, r)) out.push_back(r);
  return out;
}

int vertical_count(const DominoTableau& t) {
  return static_cast<int>(std::count_if(t.dominoes().begin(), t.dominoes().end(),
                                        [](const auto& kv) { return kv.second.is_vertical(); }));
}

std::string render(const DominoTableau& t) {
  const Shape sh = t.shape();
  int width = 1;
  for (const auto& [l, d] : t.dominoes()) width = std::max(width, static_cast<int>(std::to_string(l).size()));
  std::ostringstream os;
  for (int r = 1; r <= sh.rows(); ++r) {
    for (int c = 1; c <= sh.row_length(r); ++c) {
      const int l = t.label_at({r, c});
      std::string s = l ? std::to_string(l) : ".";
      os << std::string(width - s.size() + (c > 1 ? 1 : 0), ' ') << s;
    }
    os << '\n';
  }
  return os.str();
}

} // namespace sostar
