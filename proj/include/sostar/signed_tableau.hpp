#pragma once

#include "sostar/clan.hpp"
#include "sostar/domino.hpp"

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace sostar {

/// Signed Young tableau with signs alternating along each row, so the whole
/// sign pattern is fixed by the first sign of every row.
struct SignedTableau {
  Shape shape;
  std::vector<Sign> start_signs; // one per row, top to bottom

  int rows() const { return shape.rows(); }
  int double_rows() const { return shape.rows() / 2; }
  /// Checks sizes, doubled shape and that both rows of every double row
  /// share their first sign. Returns the problems found.
  std::vector<std::string> violations() const;

  int count(Sign s) const;

  friend bool operator==(const SignedTableau&, const SignedTableau&) = default;
  /// Shape first, then signs in row-major order with + before -.
  friend std::strong_ordering operator<=>(const SignedTableau& a, const SignedTableau& b);
};

/// Double rows are numbered from 1 at the top; double row d consists of
/// rows 2d-1 and 2d.
struct DoubleRow {
  int index = 0;
  int upper_row = 0;
  int lower_row = 0;
  int length = 0;
  friend bool operator==(const DoubleRow&, const DoubleRow&) = default;
};

DoubleRow double_row(const Shape& shape, int index);
/// The double row containing a given row.
int double_row_of(int row);

Sign end_sign(const SignedTableau& t, int row);
SignedTableau flip_double_rows(const SignedTableau& t, const std::vector<int>& indices);
/// Sets the first sign of both rows of a double row so that they end in s.
void set_end_sign(SignedTableau& t, int double_row_index, Sign s);

/// Pairs of distinct odd double rows whose simultaneous sign change is an
/// equivalence: equal lengths, or unequal lengths linked by an open cycle of
/// the companion domino tableau with its hole in one and corner in the other.
std::vector<std::pair<int, int>> equivalence_generators(const DominoTableau& companion,
                                                        const SignedTableau& t);

/// Adjacent pairs of double rows with equal length. Interchanging such rows
/// leaves the multiset of signed rows unchanged.
std::vector<std::pair<int, int>> interchangeable_double_rows(const Shape& shape);
SignedTableau interchange_double_rows(const SignedTableau& t, int a, int b);

/// All signed tableaux equivalent to t, sorted ascending (+ before -, row
/// major). Generated by the sign-change pairs above together with
/// interchanges of equal-length double rows.
std::vector<SignedTableau> equivalence_orbit(const DominoTableau& companion, const SignedTableau& t);

struct SignedClass {
  DominoTableau companion;
  SignedTableau representative; // minimum of its orbit

  friend bool operator==(const SignedClass&, const SignedClass&) = default;
  friend auto operator<=>(const SignedClass&, const SignedClass&) = default;
};

SignedClass canonicalize(const DominoTableau& companion, const SignedTableau& t);

/// Makes every odd-length row start with +; even rows are untouched.
SignedTableau normalize_orbit(const SignedTableau& t);

struct OrbitDescriptor {
  SignedTableau normalized;
  bool very_even = false;
  /// "unique" when some row has odd length, otherwise "undetermined": the
  /// choice between the two orbits of a very even shape is not computed.
  std::string refinement;

  friend bool operator==(const OrbitDescriptor&, const OrbitDescriptor&) = default;
  friend auto operator<=>(const OrbitDescriptor&, const OrbitDescriptor&) = default;
};

OrbitDescriptor orbit_label(const SignedTableau& normalized);

/// Signs as text, one string per row, e.g. {"+-+", "+-+"}.
std::vector<std::string> sign_rows(const SignedTableau& t);

} // namespace sostar
