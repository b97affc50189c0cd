#pragma once

#include "sostar/cartan.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sostar {

/// A cell of a Young diagram; row 1 is the top row, column 1 the leftmost.
struct Square {
  int row = 0;
  int col = 0;
  friend constexpr bool operator==(Square, Square) = default;
  friend constexpr auto operator<=>(Square, Square) = default;
};

/// Two edge-adjacent squares, stored with the top/left square first.
struct Domino {
  Square first;
  Square second;

  static Domino horizontal(int row, int col) { return {{row, col}, {row, col + 1}}; }
  static Domino vertical(int row, int col) { return {{row, col}, {row + 1, col}}; }
  /// Orders the squares; does not check adjacency.
  static Domino of(Square a, Square b) { return a < b ? Domino{a, b} : Domino{b, a}; }

  bool is_horizontal() const noexcept { return first.row == second.row; }
  bool is_vertical() const noexcept { return first.col == second.col; }
  bool contains(Square s) const noexcept { return first == s || second == s; }
  bool overlaps(const Domino& o) const noexcept {
    return contains(o.first) || contains(o.second);
  }

  friend bool operator==(const Domino&, const Domino&) = default;
  friend auto operator<=>(const Domino&, const Domino&) = default;
};

/// A partition, as weakly decreasing row lengths.
struct Shape {
  std::vector<int> parts;

  int size() const;
  int rows() const { return static_cast<int>(parts.size()); }
  int row_length(int row) const { return row >= 1 && row <= rows() ? parts[row - 1] : 0; }
  /// Parts occur in equal consecutive pairs.
  bool is_doubled() const;
  bool all_even() const;

  friend bool operator==(const Shape&, const Shape&) = default;
  friend auto operator<=>(const Shape&, const Shape&) = default;
};

/// Labelled domino tiling. Labels need not be contiguous while a tableau is
/// being built by insertion; finished tableaux use labels 1..n.
class DominoTableau {
public:
  DominoTableau() = default;
  explicit DominoTableau(std::map<int, Domino> placement) : placement_(std::move(placement)) {}

  const std::map<int, Domino>& dominoes() const noexcept { return placement_; }
  int size() const noexcept { return static_cast<int>(placement_.size()); }
  bool empty() const noexcept { return placement_.empty(); }
  bool contains(int label) const { return placement_.count(label) != 0; }
  const Domino& domino(int label) const;

  /// Row lengths of the occupied region (assumes it is a Young diagram).
  Shape shape() const;
  /// Label at a square, or 0 when the square is unoccupied.
  int label_at(Square s) const;

  /// Copy with the domino for `label` moved or inserted.
  DominoTableau with(int label, const Domino& d) const;
  DominoTableau without(int label) const;
  /// Copy keeping only labels <= max_label.
  DominoTableau restricted(int max_label) const;
  /// Copy with the two labels exchanged (placements unchanged).
  DominoTableau swap_labels(int a, int b) const;

  friend bool operator==(const DominoTableau&, const DominoTableau&) = default;
  friend auto operator<=>(const DominoTableau& a, const DominoTableau& b) {
    return a.placement_ <=> b.placement_;
  }

private:
  std::map<int, Domino> placement_;
};

/// Human readable list of violated tableau invariants; empty means valid.
std::vector<std::string> validate_tableau(const DominoTableau& t);
bool is_valid_tableau(const DominoTableau& t);

/// Every standard domino tableau with labels 1..n, in ascending order.
std::vector<DominoTableau> standard_tableaux(int n);

enum class Orientation { horizontal_first_row, vertical_first_column };

/// Domino insertion with bumping of larger labels.
DominoTableau insert_domino(const DominoTableau& t, int label, Orientation o);

/// Checkerboard choice of fixed squares: A fixes squares with row+col even,
/// B those with row+col odd.
enum class Coloring { A, B };

/// Coloring whose cycles drive the tableau-pair algorithm and the signed
/// tableau equivalence. Pinned by the rank 2 census.
inline constexpr Coloring kCycleColoring = Coloring::A;

bool is_fixed(Square s, Coloring c);

enum class CycleKind { open, closed };

struct Cycle {
  std::vector<int> labels; // sorted
  CycleKind kind = CycleKind::closed;
  std::optional<Square> hole;   // square vacated by moving through
  std::optional<Square> corner; // square newly occupied
  Coloring coloring = kCycleColoring;

  bool contains(int label) const;
  friend bool operator==(const Cycle&, const Cycle&) = default;
};

/// Alternate position of the domino with the given label, keeping its fixed
/// square.
Domino moved_position(const DominoTableau& t, int label, Coloring coloring);

/// Partition of the labels of t into cycles, ordered by smallest label.
std::vector<Cycle> cycles(const DominoTableau& t, Coloring coloring = kCycleColoring);
Cycle cycle_of(const DominoTableau& t, int label, Coloring coloring = kCycleColoring);

/// Moves every domino of the cycle to its alternate position. Throws
/// DomainError if c is not a cycle of t.
DominoTableau move_through(const DominoTableau& t, const Cycle& c);

/// Requires labels 1..n with n >= 2.
std::vector<SimpleRoot> tau_invariant_tableau(const DominoTableau& t);
bool in_tau(const DominoTableau& t, SimpleRoot r);

int vertical_count(const DominoTableau& t);

/// Multi-line picture of the tableau, one cell per square.
std::string render(const DominoTableau& t);

} // namespace sostar
