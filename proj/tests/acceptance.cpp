// One line per acceptance criterion; the exit status is nonzero if any fails.

#include "sostar/hmap.hpp"
#include "sostar/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>

using namespace sostar;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

std::int64_t note(const Report& r, const std::string& key) {
  for (const auto& [k, v] : r.notes)
    if (k == key) return v;
  return 0;
}

void absorb(Outcome& o, const Report& r) {
  if (r.passed()) return;
  o.ok = false;
  const auto& f = r.failures.front();
  o.detail += " " + r.suite + "@n=" + std::to_string(r.n) + ": " + std::to_string(r.failures.size()) +
              " failures, first " + f.op + " on " + f.clan;
}

std::string signs(const SignedTableau& t) {
  std::string out;
  for (auto s : t.start_signs) out += s == Sign::plus ? '+' : '-';
  return out;
}

// Squares of each label in reading order, written as "label:r,c r,c".
std::string placement(const DominoTableau& t) {
  std::string out;
  for (int label = 1; label <= t.size(); ++label) {
    const auto d = t.domino(label);
    out += std::to_string(label) + ":" + std::to_string(d.first.row) + "," + std::to_string(d.first.col) +
           " " + std::to_string(d.second.row) + "," + std::to_string(d.second.col) + ";";
  }
  return out;
}

Outcome census() {
  const std::string across = "1:1,1 1,2;2:2,1 2,2;";
  const std::string side = "1:1,1 2,1;2:1,2 2,2;";
  const std::string stacked = "1:1,1 2,1;2:3,1 4,1;";
  const struct {
    const char* clan;
    std::string dominoes;
    const char* signs;
  } expected[] = {
      {"1+;2+", across, "--"}, {"1-;2-", across, "++"},    {"1+;2-", side, "++"},
      {"1-;2+", side, "--"},   {"(1,2)-", stacked, "++++"}, {"(1,2)+", stacked, "++--"},
  };
  Outcome o;
  std::set<HPair> distinct;
  for (const auto& e : expected) {
    const auto p = hmap(parse_clan(e.clan));
    distinct.insert(p);
    const auto got = placement(p.t1) + " " + signs(p.class2.representative);
    if (got != e.dominoes + " " + e.signs) {
      o.ok = false;
      o.detail += std::string(" ") + e.clan + " -> " + got;
    }
  }
  if (distinct.size() != 6) {
    o.ok = false;
    o.detail += " images not distinct";
  }
  return o;
}

Outcome bijection() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  for (int n = 1; n <= 5; ++n) {
    const auto r = check_bijection(n);
    absorb(o, r);
    o.detail += " n=" + std::to_string(n) + ":" + std::to_string(note(r, "image"));
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs >= 60) o.ok = false;
  o.detail += " (" + std::to_string(secs).substr(0, 5) + " s)";
  return o;
}

Outcome per_rank(const std::function<Report(int)>& check, int lo, int hi) {
  Outcome o;
  std::int64_t checked = 0;
  for (int n = lo; n <= hi; ++n) {
    const auto r = check(n);
    absorb(o, r);
    checked += r.checked;
  }
  o.detail += " checked " + std::to_string(checked);
  return o;
}

Outcome wallcross() {
  Outcome o;
  std::int64_t rank2 = 0, rank4 = 0, doubles = 0, shared = 0;
  for (int n = 2; n <= 5; ++n) {
    const auto r = check_wallcross(n);
    absorb(o, r);
    rank2 += note(r, "rank 2 applications");
    rank4 += note(r, "rank 4 applications");
    doubles += note(r, "rank 4 two-clan images");
    shared += note(r, "two-clan images sharing one tableau");
  }
  if (rank4 == 0 || doubles == 0 || shared == 0) {
    o.ok = false;
    o.detail += " double-image or shared-tableau cases not exercised";
  }
  o.detail += " rank2=" + std::to_string(rank2) + " rank4=" + std::to_string(rank4) +
              " two-clan=" + std::to_string(doubles) + " shared=" + std::to_string(shared);
  return o;
}

Outcome parity_and_corollary() {
  Outcome o = per_rank(check_parity_preservation, 1, 5);
  const Outcome c = per_rank(check_corollary, 1, 5);
  o.ok = o.ok && c.ok;
  o.detail = " parity" + o.detail + "; corollary" + c.detail;
  return o;
}

Outcome representatives() {
  Outcome o;
  for (int n = 1; n <= 6; ++n) absorb(o, check_representative_independence(n, 1000, 20261016 + n));
  o.detail += " 1000 trials per rank, n=1..6";
  return o;
}

Outcome structure() {
  return per_rank([](int n) { return check_structure(n, 200, 9000 + n); }, 1, 6);
}

Outcome cell_invariants() {
  Outcome o;
  for (int n = 1; n <= 5; ++n) {
    const auto r = check_cells(n);
    absorb(o, r);
    o.detail += " n=" + std::to_string(n) + ":" + std::to_string(note(r, "cells"));
  }
  return o;
}

} // namespace

int main() {
  const struct {
    const char* name;
    std::function<Outcome()> run;
  } criteria[] = {
      {"1 census at rank 2", census},
      {"2 bijection counts", bijection},
      {"3 tau commutation", [] { return per_rank(check_tau, 1, 5); }},
      {"4 wall-crossing commutation", wallcross},
      {"5 parity and range dichotomies", parity_and_corollary},
      {"6 representative independence", representatives},
      {"7 structural invariants", structure},
      {"8 cell invariants", cell_invariants},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string(" threw: ") + e.what()};
    }
    std::printf("%s  %s:%s\n", o.ok ? "PASS" : "FAIL", c.name, o.detail.c_str());
    std::fflush(stdout);
    failed += !o.ok;
  }
  return failed == 0 ? 0 : 1;
}
