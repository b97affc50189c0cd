#include "sostar/wallcross.hpp"

#include "sostar/errors.hpp"
#include "sostar/hmap.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace sostar {

void validate(const Rank2Op& op, int n) {
  if (!op.alpha.valid_for(n) || !op.beta.valid_for(n))
    throw DomainError("operator " + operator_name(op) + " needs roots of rank " + std::to_string(n));
  if (!adjacent(op.alpha, op.beta))
    throw DomainError("operator " + operator_name(op) + " needs adjacent simple roots");
}

bool in_domain(const Rank2Op& op, const Clan& c) {
  validate(op, c.rank());
  return in_tau(c, op.alpha) && !in_tau(c, op.beta);
}

bool in_domain(const Rank2Op& op, const DominoTableau& t) {
  validate(op, t.size());
  return in_tau(t, op.alpha) && !in_tau(t, op.beta);
}

Clan rank2_clan(const Rank2Op& op, const Clan& c) {
  if (!in_domain(op, c))
    throw DomainError("clan " + format_clan(c) + " is not in the domain of " + operator_name(op));
  std::set<Clan> candidates{cross_action(op.alpha, c), cross_action(op.beta, c)};
  for (auto r : {op.alpha, op.beta})
    if (cayley_defined(c, r))
      for (auto& x : cayley(r, c)) candidates.insert(x);
  std::vector<Clan> good;
  for (const auto& x : candidates)
    if (!in_tau(x, op.alpha) && in_tau(x, op.beta)) good.push_back(x);
  if (good.size() != 1)
    throw InvariantError(operator_name(op) + " on " + format_clan(c) + " has " +
                         std::to_string(good.size()) + " qualifying candidates");
  return good.front();
}

namespace {

// Every standard way of tiling the squares covered by `labels` with dominoes
// carrying those labels, everything else left in place.
std::vector<DominoTableau> rearrangements(const DominoTableau& t, const std::vector<int>& labels) {
  std::vector<Square> squares;
  DominoTableau base = t;
  for (int l : labels) {
    squares.push_back(t.domino(l).first);
    squares.push_back(t.domino(l).second);
    base = base.without(l);
  }
  std::sort(squares.begin(), squares.end());
  std::vector<DominoTableau> out;
  std::function<void(const DominoTableau&, const std::vector<Square>&, const std::vector<int>&)> fill =
      [&](const DominoTableau& cur, const std::vector<Square>& left, const std::vector<int>& free) {
        if (left.empty()) {
          if (is_valid_tableau(cur)) out.push_back(cur);
          return;
        }
        const Square s = left.front();
        for (Square nb : {Square{s.row, s.col + 1}, Square{s.row + 1, s.col}}) {
          if (std::find(left.begin(), left.end(), nb) == left.end()) continue;
          std::vector<Square> rest;
          for (auto x : left)
            if (x != s && x != nb) rest.push_back(x);
          for (std::size_t k = 0; k < free.size(); ++k) {
            auto others = free;
            others.erase(others.begin() + static_cast<std::ptrdiff_t>(k));
            fill(cur.with(free[k], Domino::of(s, nb)), rest, others);
          }
        }
      };
  fill(base, squares, labels);
  return out;
}

bool same_positions(const DominoTableau& a, const DominoTableau& b) {
  std::set<Domino> pa, pb;
  for (auto& [l, d] : a.dominoes()) pa.insert(d);
  for (auto& [l, d] : b.dominoes()) pb.insert(d);
  return pa == pb;
}

} // namespace

DominoTableau rank2_tableau(const Rank2Op& op, const DominoTableau& t) {
  if (!in_domain(op, t))
    throw DomainError("tableau is not in the domain of " + operator_name(op));
  const bool fork_pair = op.alpha.is_fork() || op.beta.is_fork();
  const int top = fork_pair ? 3 : std::max(op.alpha.index(), op.beta.index());
  const std::vector<int> labels{top - 2, top - 1, top};

  std::vector<DominoTableau> good;
  for (auto& x : rearrangements(t, labels))
    if (!in_tau(x, op.alpha) && in_tau(x, op.beta)) good.push_back(x);
  if (good.size() > 1) {
    // Exchanging two consecutive labels wins over any other rearrangement.
    std::vector<DominoTableau> swaps;
    for (auto& x : good)
      if (x == t.swap_labels(top - 2, top - 1) || x == t.swap_labels(top - 1, top)) swaps.push_back(x);
    good = swaps;
  }
  if (good.size() != 1)
    throw InvariantError(operator_name(op) + ": expected one rearrangement, found " +
                         std::to_string(good.size()));
  DominoTableau out = good.front();
  if (fork_pair && !same_positions(out, t)) {
    const Cycle c = cycle_of(out, 3);
    if (c.kind == CycleKind::closed) out = move_through(out, c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Rank 4

namespace {

const std::vector<SimpleRoot>& d4_roots() {
  static const std::vector<SimpleRoot> roots{SimpleRoot::fork(), SimpleRoot::chain(2),
                                             SimpleRoot::chain(3), SimpleRoot::chain(4)};
  return roots;
}

Rank4Type source_type(const Rank4Op& op) {
  return op.direction == Rank4Direction::D_to_beta ? Rank4Type::A_beta : Rank4Type::D;
}

Rank4Type target_type(const Rank4Op& op) {
  return op.direction == Rank4Direction::D_to_beta ? Rank4Type::D : Rank4Type::A_beta;
}

template <class T> Rank4Type type_of(const T& x) {
  std::vector<SimpleRoot> tau;
  for (auto r : d4_roots())
    if (in_tau(x, r)) tau.push_back(r);
  return rank4_type(tau);
}

// Moves t through the fewest closed cycles meeting labels 1..4 that make
// those four dominoes cover a doubled shape. Open cycles are never used.
DominoTableau make_first_four_special(const DominoTableau& t, std::set<int>* moved = nullptr) {
  if (t.restricted(4).shape().is_doubled()) return t;
  std::vector<Cycle> candidates;
  for (const auto& c : cycles(t))
    if (c.labels.front() <= 4) candidates.push_back(c);
  const int k = static_cast<int>(candidates.size());
  std::vector<int> masks(1 << k);
  std::iota(masks.begin(), masks.end(), 0);
  std::stable_sort(masks.begin(), masks.end(),
                   [](int a, int b) { return __builtin_popcount(a) < __builtin_popcount(b); });
  bool open_would_help = false;
  for (int mask : masks) {
    if (mask == 0) continue;
    DominoTableau cur = t;
    bool uses_open = false;
    for (int i = 0; i < k; ++i) {
      if (!(mask >> i & 1)) continue;
      if (candidates[i].kind == CycleKind::open) uses_open = true;
      const Cycle used = cycle_of(cur, candidates[i].labels.front());
      if (moved) moved->insert(used.labels.begin(), used.labels.end());
      cur = move_through(cur, used);
    }
    if (!cur.restricted(4).shape().is_doubled()) {
      if (moved) moved->clear();
      continue;
    }
    if (uses_open) {
      if (moved) moved->clear();
      open_would_help = true;
      continue;
    }
    return cur;
  }
  if (open_would_help)
    throw InvariantError("first four dominoes can only be made special through an open cycle");
  throw DomainError("first four dominoes cannot be brought to a doubled shape");
}

} // namespace

Rank4Type rank4_type(const std::vector<SimpleRoot>& tau) {
  std::set<SimpleRoot> in;
  for (auto r : tau)
    if (r.is_fork() || r.index() <= 4) in.insert(r);
  if (in == std::set<SimpleRoot>{SimpleRoot::chain(3), SimpleRoot::chain(4)}) return Rank4Type::A_beta;
  if (in == std::set<SimpleRoot>{SimpleRoot::chain(3)}) return Rank4Type::D;
  return Rank4Type::neither;
}

namespace {

// Moves x through its closed 3-cycle and then through its closed 4-cycle when
// that is a different cycle.
DominoTableau move_through_three_and_four(const DominoTableau& x) {
  DominoTableau moved = x;
  const Cycle c3 = cycle_of(x, 3);
  if (c3.kind == CycleKind::closed) moved = move_through(moved, cycle_of(moved, 3));
  const Cycle c4 = cycle_of(x, 4);
  if (c4.kind == CycleKind::closed && !c3.contains(4)) moved = move_through(moved, cycle_of(moved, 4));
  return moved;
}

} // namespace

std::vector<DominoTableau> rank4_tableau(const Rank4Op& op, const DominoTableau& t) {
  if (t.size() < 4) throw DomainError("rank 4 operators need at least four dominoes");
  if (type_of(t) != source_type(op))
    throw DomainError("tableau is not in the domain of " + operator_name(op));
  const bool special = t.restricted(4).shape().is_doubled();
  std::set<int> moved_labels;
  const DominoTableau base = make_first_four_special(t, &moved_labels);
  const DominoTableau swapped = base.swap_labels(3, 4);
  if (!is_valid_tableau(swapped))
    throw DomainError(operator_name(op) + ": exchanging the 3- and 4-dominoes is not standard");

  DominoTableau first = swapped;
  // A tableau that had to be moved to make the first four dominoes special
  // is moved back through the closed 3-cycle of the exchanged tableau. Going
  // from D to beta this is skipped when the moved cycles already carried
  // both the 3- and the 4-domino.
  const bool moved_both = moved_labels.count(3) && moved_labels.count(4);
  if (!special && (op.direction == Rank4Direction::beta_to_D || !moved_both)) {
    const Cycle c3 = cycle_of(swapped, 3);
    if (c3.kind == CycleKind::closed) first = move_through(swapped, c3);
  }
  std::set<DominoTableau> out{first};
  if (cycle_of(base, 4).contains(3)) {
    if (special) {
      out.insert(move_through_three_and_four(swapped));
    } else if (op.direction == Rank4Direction::beta_to_D) {
      const Cycle c3 = cycle_of(first, 3);
      const Cycle c4 = cycle_of(first, 4);
      if (c3.kind == CycleKind::closed && c4.kind == CycleKind::closed && !c3.contains(4))
        out.insert(move_through_three_and_four(first));
    }
  }
  for (const auto& x : out)
    if (type_of(x) != target_type(op))
      throw DomainError(operator_name(op) + ": image has the wrong tau-invariant");
  return {out.begin(), out.end()};
}

bool in_domain(const Rank4Op& op, const DominoTableau& t) {
  try {
    rank4_tableau(op, t);
    return true;
  } catch (const DomainError&) {
    return false;
  }
}

bool closed_on_first_four(const Clan& c) {
  for (const auto& e : c.entries())
    if (e.is_pair() && e.lo <= 4 && e.hi > 4) return false;
  return true;
}

namespace {

std::set<Clan> d4_reachable(const Clan& c) {
  std::set<Clan> seen{c};
  std::vector<Clan> todo{c};
  while (!todo.empty()) {
    const Clan x = todo.back();
    todo.pop_back();
    for (auto r : d4_roots()) {
      std::vector<Clan> next{cross_action(r, x)};
      if (cayley_defined(x, r))
        for (auto& y : cayley(r, x)) next.push_back(y);
      for (auto& y : next)
        if (seen.insert(y).second) todo.push_back(y);
    }
  }
  return seen;
}

OrbitDescriptor variety_of(const HPair& p) {
  return orbit_label(normalize_orbit(p.class2.representative));
}

std::vector<Clan> explicit_exchange(const Rank4Op& op, const Clan& c) {
  std::vector<Entry> rest;
  for (const auto& e : c.entries())
    if (!e.contains(1) && !e.contains(3)) rest.push_back(e);
  auto make = [&](std::initializer_list<Entry> extra) {
    auto entries = rest;
    entries.insert(entries.end(), extra);
    return Clan(c.rank(), std::move(entries));
  };
  const Entry& e1 = c.entry_of(1);
  const Entry& e3 = c.entry_of(3);
  if (op.direction == Rank4Direction::D_to_beta) {
    if (e1.is_pair() || e3.is_pair()) return {};
    return {make({Entry::pair(1, 3, -(e1.sign * e3.sign))})};
  }
  if (!e1.is_pair() || e1.partner(1) != 3) return {};
  const Sign s = -e1.sign;
  std::vector<Clan> out{make({Entry::singleton(1, Sign::plus), Entry::singleton(3, s)}),
                        make({Entry::singleton(1, Sign::minus), Entry::singleton(3, -s)})};
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

std::vector<Clan> rank4_clan(const Rank4Op& op, const Clan& c) {
  if (c.rank() < 4) throw DomainError("rank 4 operators need rank at least 4");
  const HPair image = hmap(c);
  if (type_of(c) != source_type(op) || !in_domain(op, image.t1))
    throw DomainError("clan " + format_clan(c) + " is not in the domain of " + operator_name(op));
  if (closed_on_first_four(c)) {
    auto out = explicit_exchange(op, c);
    if (out.empty())
      throw InvariantError(operator_name(op) + ": " + format_clan(c) +
                           " is closed on 1..4 but lacks the exchanged entries");
    return out;
  }
  const auto tableaux = rank4_tableau(op, image.t1);
  const auto variety = variety_of(image);
  std::vector<Clan> out;
  for (const auto& x : d4_reachable(c)) {
    if (type_of(x) != target_type(op) || clan_parity(x) != clan_parity(c)) continue;
    const HPair p = hmap(x);
    if (variety_of(p) != variety) continue;
    if (std::binary_search(tableaux.begin(), tableaux.end(), p.t1)) out.push_back(x);
  }
  if (out.empty())
    throw InvariantError(operator_name(op) + ": no reachable clan matches the image of " +
                         format_clan(c));
  return out;
}

bool in_domain(const Rank4Op& op, const Clan& c) {
  if (c.rank() < 4 || type_of(c) != source_type(op)) return false;
  return in_domain(op, hmap(c).t1);
}

// ---------------------------------------------------------------------------
// Names

OperatorSpec parse_operator(std::string_view text) {
  auto fail = [&]() -> OperatorSpec {
    throw ParseError("expected an operator such as T:a2,a3, T:b,a3, T:D,b or T:b,D", 0);
  };
  if (text.substr(0, 2) != "T:") return fail();
  const auto body = text.substr(2);
  const auto comma = body.find(',');
  if (comma == std::string_view::npos) return fail();
  const auto first = body.substr(0, comma);
  const auto second = body.substr(comma + 1);
  OperatorSpec spec;
  if (first == "D" && second == "b") {
    spec.rank4 = true;
    spec.rank4_op.direction = Rank4Direction::D_to_beta;
    return spec;
  }
  if (first == "b" && second == "D") {
    spec.rank4 = true;
    spec.rank4_op.direction = Rank4Direction::beta_to_D;
    return spec;
  }
  spec.rank2 = Rank2Op{parse_root(first), parse_root(second)};
  if (!adjacent(spec.rank2.alpha, spec.rank2.beta))
    throw ParseError("operator roots must be adjacent", 2);
  return spec;
}

std::string operator_name(const Rank2Op& op) {
  return "T:" + root_name(op.alpha) + "," + root_name(op.beta);
}

std::string operator_name(const Rank4Op& op) {
  return op.direction == Rank4Direction::D_to_beta ? "T:D,b" : "T:b,D";
}

// ---------------------------------------------------------------------------
// Cells

CellPartition cells(int n, int max_n) {
  if (n < 0 || n > max_n)
    throw DomainError("rank " + std::to_string(n) + " exceeds the cell bound " + std::to_string(max_n));
  const auto members = enumerate_clans(n, ClanFilter::even);
  std::map<Clan, int> index;
  for (std::size_t k = 0; k < members.size(); ++k) index[members[k]] = static_cast<int>(k);
  std::vector<int> parent(members.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };

  CellPartition out;
  out.rank = n;
  auto link = [&](const Clan& a, const Clan& b, const std::string& op) {
    auto it = index.find(b);
    if (it == index.end())
      throw InvariantError(op + " leaves the even clans: " + format_clan(a) + " -> " + format_clan(b));
    out.edges.push_back({a, b, op});
    parent[find(index.at(a))] = find(it->second);
  };

  std::vector<Rank2Op> ops2;
  for (auto a : simple_roots(n))
    for (auto b : simple_roots(n))
      if (adjacent(a, b)) ops2.push_back({a, b});
  for (const auto& c : members) {
    for (const auto& op : ops2)
      if (in_domain(op, c)) link(c, rank2_clan(op, c), operator_name(op));
    if (n < 4) continue;
    for (auto dir : {Rank4Direction::D_to_beta, Rank4Direction::beta_to_D}) {
      const Rank4Op op{dir};
      if (!in_domain(op, c)) continue;
      for (const auto& d : rank4_clan(op, c)) link(c, d, operator_name(op));
    }
  }
  std::sort(out.edges.begin(), out.edges.end(), [](const CellEdge& a, const CellEdge& b) {
    return std::tie(a.from, a.to, a.op) < std::tie(b.from, b.to, b.op);
  });

  std::map<int, std::vector<Clan>> groups;
  for (std::size_t k = 0; k < members.size(); ++k) groups[find(static_cast<int>(k))].push_back(members[k]);
  for (auto& [root, list] : groups) {
    Cell cell;
    cell.members = list;
    std::set<Shape> shapes;
    std::set<OrbitDescriptor> orbits;
    for (const auto& c : list) {
      const HPair p = hmap(c);
      shapes.insert(p.t1.shape());
      orbits.insert(variety_of(p));
    }
    cell.shapes.assign(shapes.begin(), shapes.end());
    cell.orbits.assign(orbits.begin(), orbits.end());
    out.cells.push_back(std::move(cell));
  }
  std::sort(out.cells.begin(), out.cells.end(),
            [](const Cell& a, const Cell& b) { return a.members.front() < b.members.front(); });
  return out;
}

} // namespace sostar
