#include "sostar/verify.hpp"

#include "sostar/cartan.hpp"
#include "sostar/clan.hpp"
#include "sostar/domino.hpp"
#include "sostar/errors.hpp"
#include "sostar/hmap.hpp"
#include "sostar/signed_tableau.hpp"
#include "sostar/wallcross.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

namespace sostar {

namespace {

void check_rank(int n, int bound) {
  if (n < 1 || n > bound)
    throw DomainError("rank " + std::to_string(n) + " is outside 1.." + std::to_string(bound));
}

std::string one_line(const DominoTableau& t) {
  std::string s = render(t);
  while (!s.empty() && s.back() == '\n') s.pop_back();
  std::replace(s.begin(), s.end(), '\n', '/');
  return s;
}

std::string one_line(const SignedTableau& t) {
  std::string s;
  for (const auto& row : sign_rows(t)) s += (s.empty() ? "" : "/") + row;
  return s;
}

std::string one_line(const HPair& p) { return one_line(p.t1) + " | " + one_line(p.class2.representative); }

template <class T, class F> std::string joined(const std::vector<T>& xs, F f) {
  std::string s = "{";
  for (std::size_t k = 0; k < xs.size(); ++k) s += (k ? ", " : "") + f(xs[k]);
  return s + "}";
}

std::string parity_text(Parity p) { return p == Parity::even ? "even" : "odd"; }

OrbitDescriptor variety(const HPair& p) { return orbit_label(normalize_orbit(p.class2.representative)); }

Report start(const char* suite, int n) {
  Report r;
  r.suite = suite;
  r.n = n;
  return r;
}

void fail(Report& r, const std::string& clan, const std::string& op, const std::string& expected,
          const std::string& actual) {
  r.failures.push_back({clan, op, expected, actual});
}

std::vector<Rank2Op> rank2_ops(int n) {
  std::vector<Rank2Op> ops;
  for (auto a : simple_roots(n))
    for (auto b : simple_roots(n))
      if (adjacent(a, b)) ops.push_back({a, b});
  return ops;
}

} // namespace

Report check_tau(int n) {
  check_rank(n, kVerifyCeiling);
  Report r = start("tau", n);
  for_each_clan(n, ClanFilter::all, [&](const Clan& c) {
    const auto t = hmap(c).t1;
    for (auto root : simple_roots(n)) {
      ++r.checked;
      const bool want = in_tau(c, root);
      const bool got = in_tau(t, root);
      if (want != got)
        fail(r, format_clan(c), "tau " + root_name(root), want ? "in" : "out", got ? "in" : "out");
    }
  });
  return r;
}

Report check_bijection(int n) {
  check_rank(n, kVerifyCeiling);
  Report r = start("bijection", n);
  std::map<HPair, Clan> seen;
  for_each_clan(n, ClanFilter::all, [&](const Clan& c) {
    ++r.checked;
    const HPair p = hmap(c);
    auto problems = HState{p.t1, p.class2.representative}.violations();
    if (p.class2.representative != canonicalize(p.t1, p.class2.representative).representative)
      problems.push_back("representative is not canonical");
    if (!problems.empty()) fail(r, format_clan(c), "range", "admissible pair", problems.front());
    auto [it, fresh] = seen.emplace(p, c);
    if (!fresh) fail(r, format_clan(c), "injectivity", "distinct image", "same image as " + format_clan(it->second));
  });

  std::int64_t admissible = 0;
  for (const auto& t : standard_tableaux(n)) {
    const Shape s = t.shape();
    if (!s.is_doubled()) continue;
    const int d = s.rows() / 2;
    std::set<SignedTableau> classes;
    for (int mask = 0; mask < (1 << d); ++mask) {
      SignedTableau st{s, std::vector<Sign>(s.parts.size(), Sign::plus)};
      for (int k = 0; k < d; ++k)
        if (mask >> k & 1) st.start_signs[2 * k] = st.start_signs[2 * k + 1] = Sign::minus;
      classes.insert(canonicalize(t, st).representative);
    }
    admissible += static_cast<std::int64_t>(classes.size());
  }
  const auto clans = static_cast<std::int64_t>(clan_count(n));
  const auto image = static_cast<std::int64_t>(seen.size());
  if (image != clans)
    fail(r, "", "image size", std::to_string(clans), std::to_string(image));
  if (admissible != clans)
    fail(r, "", "admissible pairs", std::to_string(clans), std::to_string(admissible));
  r.notes = {{"clans", clans}, {"image", image}, {"admissible pairs", admissible}};
  return r;
}

Report check_wallcross(int n) {
  check_rank(n, kVerifyCeiling);
  Report r = start("wallcross", n);
  std::int64_t rank2 = 0, rank4 = 0, explicit_cases = 0, two_clans = 0, shared = 0;
  const auto ops = rank2_ops(n);
  for_each_clan(n, ClanFilter::all, [&](const Clan& c) {
    const HPair p = hmap(c);
    for (const auto& op : ops) {
      if (!in_domain(op, c)) continue;
      ++r.checked;
      ++rank2;
      try {
        const Clan d = rank2_clan(op, c);
        const auto want = rank2_tableau(op, p.t1);
        const auto got = hmap(d).t1;
        if (want != got) fail(r, format_clan(c), operator_name(op), one_line(want), one_line(got));
        const Rank2Op reversed{op.beta, op.alpha};
        const Clan back = rank2_clan(reversed, d);
        if (back != c) fail(r, format_clan(c), operator_name(op) + " then " + operator_name(reversed),
                            format_clan(c), format_clan(back));
      } catch (const std::exception& e) {
        fail(r, format_clan(c), operator_name(op), "an image", e.what());
      }
    }
    if (n < 4) return;
    for (auto dir : {Rank4Direction::D_to_beta, Rank4Direction::beta_to_D}) {
      const Rank4Op op{dir};
      if (!in_domain(op, c)) continue;
      ++r.checked;
      ++rank4;
      if (closed_on_first_four(c)) ++explicit_cases;
      try {
        const auto want = rank4_tableau(op, p.t1);
        const auto images = rank4_clan(op, c);
        std::vector<DominoTableau> got;
        for (const auto& d : images) got.push_back(hmap(d).t1);
        std::sort(got.begin(), got.end());
        got.erase(std::unique(got.begin(), got.end()), got.end());
        if (images.size() == 2) {
          ++two_clans;
          if (got.size() == 1) ++shared;
        }
        if (want != got)
          fail(r, format_clan(c), operator_name(op), joined(want, [](auto& t) { return one_line(t); }),
               joined(got, [](auto& t) { return one_line(t); }));
      } catch (const std::exception& e) {
        fail(r, format_clan(c), operator_name(op), "an image", e.what());
      }
    }
  });
  r.notes = {{"rank 2 applications", rank2},
             {"rank 4 applications", rank4},
             {"rank 4 explicit exchanges", explicit_cases},
             {"rank 4 two-clan images", two_clans},
             {"two-clan images sharing one tableau", shared}};
  return r;
}

Report check_corollary(int n) {
  check_rank(n, kVerifyCeiling);
  Report r = start("corollary", n);
  std::map<HPair, Parity> image;
  for_each_clan(n, ClanFilter::all, [&](const Clan& c) { image.emplace(hmap(c), clan_parity(c)); });
  for (const auto& [p, parity] : image) {
    const SignedTableau& rep = p.class2.representative;
    const Shape& s = rep.shape;
    if (s.all_even()) {
      ++r.checked;
      const bool want_even = vertical_count(p.t1) % 4 == 0;
      if (want_even != (parity == Parity::even))
        fail(r, one_line(p), "vertical count rule", want_even ? "even" : "odd", parity_text(parity));
      continue;
    }
    for (int d = 1; d <= rep.double_rows(); ++d) {
      if (s.parts[2 * d - 2] % 2 == 0) continue;
      ++r.checked;
      const HPair q{p.t1, canonicalize(p.t1, flip_double_rows(rep, {d}))};
      auto it = image.find(q);
      const std::string op = "flip double row " + std::to_string(d);
      if (it == image.end())
        fail(r, one_line(p), op, "flipped class in the image", "not in the image");
      else if (it->second == parity)
        fail(r, one_line(p), op, parity == Parity::even ? "odd" : "even", parity_text(it->second));
    }
  }
  return r;
}

Report check_parity_preservation(int n) {
  check_rank(n, kVerifyCeiling);
  Report r = start("parity", n);
  for_each_clan(n, ClanFilter::all, [&](const Clan& c) {
    const Parity p = clan_parity(c);
    for (auto root : simple_roots(n)) {
      ++r.checked;
      const Clan x = cross_action(root, c);
      if (clan_parity(x) != p)
        fail(r, format_clan(c), "cross " + root_name(root), parity_text(p), format_clan(x));
      if (!cayley_defined(c, root)) continue;
      ++r.checked;
      for (const auto& y : cayley(root, c))
        if (clan_parity(y) != p)
          fail(r, format_clan(c), "cayley " + root_name(root), parity_text(p), format_clan(y));
    }
  });
  return r;
}

Report check_representative_independence(int n, int trials, std::uint64_t seed) {
  check_rank(n, kVerifyCeiling);
  if (trials < 0) throw DomainError("trial count must be nonnegative");
  Report r = start("reps", n);
  const auto clans = enumerate_clans(n);
  std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(n)));
  std::int64_t swaps = 0;
  for (int k = 0; k < trials; ++k) {
    const Clan& c = clans[std::uniform_int_distribution<std::size_t>(0, clans.size() - 1)(rng)];
    RepresentativeChooser choose = [&](const DominoTableau& t1, const SignedTableau& t2) {
      const auto orbit = equivalence_orbit(t1, t2);
      const auto& pick = orbit[std::uniform_int_distribution<std::size_t>(0, orbit.size() - 1)(rng)];
      if (pick != t2) ++swaps;
      return pick;
    };
    ++r.checked;
    const HPair want = hmap(c);
    try {
      const HPair got = hmap(c, choose);
      if (got != want) fail(r, format_clan(c), "random representatives", one_line(want), one_line(got));
    } catch (const std::exception& e) {
      fail(r, format_clan(c), "random representatives", one_line(want), e.what());
    }
  }
  r.notes = {{"representative changes", swaps}};
  return r;
}

namespace {

std::set<Square> squares_of(const DominoTableau& t) {
  std::set<Square> out;
  for (const auto& [label, d] : t.dominoes()) out.insert({d.first, d.second});
  return out;
}

void check_cycles(Report& r, const DominoTableau& t) {
  const std::string where = one_line(t);
  for (const auto& c : cycles(t)) {
    ++r.checked;
    const std::string op = "move through cycle of " + std::to_string(c.labels.front());
    const DominoTableau moved = move_through(t, c);
    if (!is_valid_tableau(moved)) {
      fail(r, where, op, "standard tableau", one_line(moved));
      continue;
    }
    std::set<Square> want = squares_of(t);
    if (c.kind == CycleKind::open) {
      if (!c.hole || !c.corner || !want.count(*c.hole) || want.count(*c.corner)) {
        fail(r, where, op, "hole inside and corner outside the diagram", "bad open cycle");
        continue;
      }
      want.erase(*c.hole);
      want.insert(*c.corner);
    }
    if (squares_of(moved) != want)
      fail(r, where, op, c.kind == CycleKind::open ? "hole traded for corner" : "same squares", one_line(moved));
    const Cycle back = cycle_of(moved, c.labels.front());
    if (back.labels != c.labels || back.kind != c.kind || move_through(moved, back) != t)
      fail(r, where, op + " twice", where, one_line(move_through(moved, back)));
  }
}

void check_coxeter(Report& r, const Clan& c) {
  const auto roots = simple_roots(c.rank());
  const std::string where = format_clan(c);
  auto s = [](SimpleRoot a, const Clan& x) { return cross_action(a, x); };
  for (auto a : roots) {
    ++r.checked;
    if (s(a, s(a, c)) != c) fail(r, where, "cross " + root_name(a) + " twice", where, format_clan(s(a, s(a, c))));
    for (auto b : roots) {
      if (!(a < b)) continue;
      ++r.checked;
      const std::string name = root_name(a) + "," + root_name(b);
      if (adjacent(a, b)) {
        const Clan lhs = s(a, s(b, s(a, c)));
        const Clan rhs = s(b, s(a, s(b, c)));
        if (lhs != rhs) fail(r, where, "braid " + name, format_clan(lhs), format_clan(rhs));
      } else {
        const Clan lhs = s(a, s(b, c));
        const Clan rhs = s(b, s(a, c));
        if (lhs != rhs) fail(r, where, "commute " + name, format_clan(lhs), format_clan(rhs));
      }
    }
  }
}

void check_cayley_inverse(Report& r, const Clan& c) {
  for (auto a : simple_roots(c.rank())) {
    if (!cayley_defined(c, a)) continue;
    ++r.checked;
    const auto status = root_status(c, a);
    const std::string op = "cayley " + root_name(a);
    for (const auto& d : cayley(a, c)) {
      const auto back_status = root_status(d, a);
      const bool swapped = status == RootStatus::real ? back_status == RootStatus::noncompact_imaginary
                                                      : back_status == RootStatus::real;
      if (!swapped) {
        fail(r, format_clan(c), op, "root changes between real and noncompact", to_string(back_status));
        continue;
      }
      const auto back = cayley(a, d);
      const bool ok = status == RootStatus::real ? back == std::vector<Clan>{c}
                                                 : std::find(back.begin(), back.end(), c) != back.end();
      if (!ok) fail(r, format_clan(c), op + " back", format_clan(c), joined(back, format_clan));
    }
  }
}

} // namespace

Report check_structure(int n, int trials, std::uint64_t seed) {
  check_rank(n, kVerifyCeiling);
  if (trials < 0) throw DomainError("trial count must be nonnegative");
  Report r = start("structure", n);
  std::mt19937_64 rng(seed + static_cast<std::uint64_t>(n));
  const auto tableaux = standard_tableaux(n);
  for (int k = 0; k < trials; ++k)
    check_cycles(r, tableaux[std::uniform_int_distribution<std::size_t>(0, tableaux.size() - 1)(rng)]);
  // The clan relations are cheap enough to check on every clan.
  for_each_clan(n, ClanFilter::all, [&](const Clan& c) {
    check_coxeter(r, c);
    check_cayley_inverse(r, c);
  });
  return r;
}

Report check_cells(int n) {
  check_rank(n, 6);
  Report r = start("cells", n);
  const auto part = cells(n);
  for (const auto& cell : part.cells) {
    ++r.checked;
    const std::string who = format_clan(cell.members.front());
    if (cell.shapes.size() != 1)
      fail(r, who, "cell shape", "one shape", std::to_string(cell.shapes.size()) + " shapes");
    if (cell.orbits.size() != 1)
      fail(r, who, "cell orbit", "one orbit label", std::to_string(cell.orbits.size()) + " labels");
  }
  std::map<Clan, OrbitDescriptor> label;
  auto label_of = [&](const Clan& c) -> const OrbitDescriptor& {
    auto it = label.find(c);
    if (it == label.end()) it = label.emplace(c, variety(hmap(c))).first;
    return it->second;
  };
  // Every clan, not only even ones, for every operator defined on it.
  const auto ops = rank2_ops(n);
  for_each_clan(n, ClanFilter::all, [&](const Clan& c) {
    std::vector<std::pair<std::string, Clan>> images;
    for (const auto& op : ops)
      if (in_domain(op, c)) images.emplace_back(operator_name(op), rank2_clan(op, c));
    if (n >= 4)
      for (auto dir : {Rank4Direction::D_to_beta, Rank4Direction::beta_to_D}) {
        const Rank4Op op{dir};
        if (!in_domain(op, c)) continue;
        for (const auto& d : rank4_clan(op, c)) images.emplace_back(operator_name(op), d);
      }
    for (const auto& [op, d] : images) {
      ++r.checked;
      if (hmap(d).t1.shape() != hmap(c).t1.shape())
        fail(r, format_clan(c), op + " shape", format_clan(c), format_clan(d));
      if (label_of(d) != label_of(c))
        fail(r, format_clan(c), op, one_line(label_of(c).normalized), one_line(label_of(d).normalized));
    }
  });
  r.notes = {{"cells", static_cast<std::int64_t>(part.cells.size())},
             {"edges", static_cast<std::int64_t>(part.edges.size())}};
  return r;
}

std::vector<std::string> suite_names() {
  return {"tau", "bijection", "wallcross", "corollary", "parity", "reps", "structure", "cells"};
}

std::vector<Report> run_suite(std::string_view suite, int max_n, std::uint64_t seed, int trials) {
  if (max_n < 1 || max_n > kVerifyCeiling)
    throw DomainError("--max-n must lie in 1.." + std::to_string(kVerifyCeiling));
  const auto names = suite_names();
  if (suite != "all" && std::find(names.begin(), names.end(), suite) == names.end())
    throw DomainError("unknown suite '" + std::string(suite) + "'");
  std::vector<Report> out;
  for (const auto& name : names) {
    if (suite != "all" && suite != name) continue;
    for (int n = 1; n <= max_n; ++n) {
      if (name == "tau") out.push_back(check_tau(n));
      else if (name == "bijection") out.push_back(check_bijection(n));
      else if (name == "wallcross" && n >= 2) out.push_back(check_wallcross(n));
      else if (name == "corollary") out.push_back(check_corollary(n));
      else if (name == "parity") out.push_back(check_parity_preservation(n));
      else if (name == "reps") out.push_back(check_representative_independence(n, trials, seed));
      else if (name == "structure") out.push_back(check_structure(n, trials / 10 + 1, seed));
      else if (name == "cells" && n <= 6) out.push_back(check_cells(n));
    }
  }
  return out;
}

} // namespace sostar
