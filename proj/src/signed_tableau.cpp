#include "sostar/signed_tableau.hpp"

#include "sostar/errors.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace sostar {

std::vector<std::string> SignedTableau::violations() const {
  std::vector<std::string> out;
  if (static_cast<int>(start_signs.size()) != shape.rows())
    out.push_back("one start sign per row is required");
  if (!shape.is_doubled()) out.push_back("shape is not a doubled partition");
  for (int k = 0; k + 1 < static_cast<int>(start_signs.size()); k += 2)
    if (start_signs[k] != start_signs[k + 1])
      out.push_back("double row " + std::to_string(k / 2 + 1) + " has unequal start signs");
  return out;
}

std::strong_ordering operator<=>(const SignedTableau& a, const SignedTableau& b) {
  if (auto c = a.shape <=> b.shape; c != 0) return c;
  return std::lexicographical_compare_three_way(
      a.start_signs.begin(), a.start_signs.end(), b.start_signs.begin(), b.start_signs.end(),
      [](Sign x, Sign y) { return (x == Sign::minus) <=> (y == Sign::minus); });
}

int SignedTableau::count(Sign s) const {
  int total = 0;
  for (int r = 0; r < shape.rows(); ++r) {
    const int len = shape.parts[r];
    const int first = (len + 1) / 2;
    total += start_signs[r] == s ? first : len - first;
  }
  return total;
}

DoubleRow double_row(const Shape& shape, int index) {
  if (index < 1 || 2 * index > shape.rows())
    throw std::out_of_range("double row " + std::to_string(index) + " out of range");
  return DoubleRow{index, 2 * index - 1, 2 * index, shape.parts[2 * index - 2]};
}

int double_row_of(int row) { return (row + 1) / 2; }

Sign end_sign(const SignedTableau& t, int row) {
  if (row < 1 || row > t.rows()) throw std::out_of_range("row out of range");
  const int len = t.shape.parts[row - 1];
  if (len == 0) throw DomainError("empty row has no end sign");
  const Sign s = t.start_signs[row - 1];
  return len % 2 == 1 ? s : -s;
}

SignedTableau flip_double_rows(const SignedTableau& t, const std::vector<int>& indices) {
  SignedTableau out = t;
  for (int d : indices) {
    if (d < 1 || 2 * d > t.rows())
      throw std::out_of_range("double row " + std::to_string(d) + " out of range");
    out.start_signs[2 * d - 2] = -out.start_signs[2 * d - 2];
    out.start_signs[2 * d - 1] = -out.start_signs[2 * d - 1];
  }
  return out;
}

void set_end_sign(SignedTableau& t, int d, Sign s) {
  const int len = t.shape.parts.at(2 * d - 2);
  const Sign start = len % 2 == 1 ? s : -s;
  t.start_signs.at(2 * d - 2) = start;
  t.start_signs.at(2 * d - 1) = start;
}

std::vector<std::pair<int, int>> equivalence_generators(const DominoTableau& companion,
                                                        const SignedTableau& t) {
  if (companion.shape() != t.shape) throw DomainError("signed tableau and companion differ in shape");
  const int m = t.double_rows();
  std::set<std::pair<int, int>> linked;
  for (const auto& c : cycles(companion, kCycleColoring)) {
    if (c.kind != CycleKind::open) continue;
    const int a = double_row_of(c.hole->row);
    const int b = double_row_of(c.corner->row);
    if (a != b && a <= m && b <= m) linked.insert(std::minmax(a, b));
  }
  std::vector<std::pair<int, int>> out;
  for (int a = 1; a <= m; ++a) {
    const int la = t.shape.parts[2 * a - 2];
    if (la % 2 == 0) continue;
    for (int b = a + 1; b <= m; ++b) {
      const int lb = t.shape.parts[2 * b - 2];
      if (lb % 2 == 0) continue;
      if (la == lb || linked.count({a, b})) out.emplace_back(a, b);
    }
  }
  return out;
}

std::vector<std::pair<int, int>> interchangeable_double_rows(const Shape& shape) {
  std::vector<std::pair<int, int>> out;
  const int m = shape.rows() / 2;
  for (int a = 1; a < m; ++a)
    if (shape.parts[2 * a - 2] == shape.parts[2 * a]) out.emplace_back(a, a + 1);
  return out;
}

SignedTableau interchange_double_rows(const SignedTableau& t, int a, int b) {
  if (t.shape.parts.at(2 * a - 2) != t.shape.parts.at(2 * b - 2))
    throw DomainError("only double rows of equal length can be interchanged");
  SignedTableau out = t;
  std::swap(out.start_signs[2 * a - 2], out.start_signs[2 * b - 2]);
  std::swap(out.start_signs[2 * a - 1], out.start_signs[2 * b - 1]);
  return out;
}

std::vector<SignedTableau> equivalence_orbit(const DominoTableau& companion, const SignedTableau& t) {
  const auto gens = equivalence_generators(companion, t);
  std::set<SignedTableau> seen{t};
  std::vector<SignedTableau> frontier{t};
  while (!frontier.empty()) {
    SignedTableau cur = std::move(frontier.back());
    frontier.pop_back();
    auto visit = [&](SignedTableau next) {
      if (seen.insert(next).second) frontier.push_back(std::move(next));
    };
    for (const auto& [a, b] : gens) visit(flip_double_rows(cur, {a, b}));
    for (const auto& [a, b] : interchangeable_double_rows(cur.shape)) visit(interchange_double_rows(cur, a, b));
  }
  return {seen.begin(), seen.end()};
}

SignedClass canonicalize(const DominoTableau& companion, const SignedTableau& t) {
  if (auto v = t.violations(); !v.empty()) throw DomainError("invalid signed tableau: " + v.front());
  return SignedClass{companion, equivalence_orbit(companion, t).front()};
}

SignedTableau normalize_orbit(const SignedTableau& t) {
  SignedTableau out = t;
  for (int r = 0; r < t.rows(); ++r)
    if (t.shape.parts[r] % 2 == 1) out.start_signs[r] = Sign::plus;
  return out;
}

OrbitDescriptor orbit_label(const SignedTableau& normalized) {
  OrbitDescriptor d;
  d.normalized = normalized;
  d.very_even = normalized.shape.all_even();
  d.refinement = d.very_even ? "undetermined" : "unique";
  return d;
}

std::vector<std::string> sign_rows(const SignedTableau& t) {
  std::vector<std::string> out;
  for (int r = 0; r < t.rows(); ++r) {
    std::string row;
    Sign s = t.start_signs[r];
    for (int c = 0; c < t.shape.parts[r]; ++c, s = -s) row += to_char(s);
    out.push_back(row);
  }
  return out;
}

} // namespace sostar
