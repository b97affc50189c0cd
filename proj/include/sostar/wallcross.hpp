#pragma once

#include "sostar/cartan.hpp"
#include "sostar/clan.hpp"
#include "sostar/domino.hpp"
#include "sostar/signed_tableau.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace sostar {

/// Wall-crossing operator for an adjacent pair of simple roots. Its domain
/// is alpha in tau, beta not in tau; its image has the roles reversed.
struct Rank2Op {
  SimpleRoot alpha;
  SimpleRoot beta;

  friend bool operator==(const Rank2Op&, const Rank2Op&) = default;
};

/// Throws DomainError unless the roots are adjacent and valid for rank n.
void validate(const Rank2Op& op, int n);

bool in_domain(const Rank2Op& op, const Clan& c);
bool in_domain(const Rank2Op& op, const DominoTableau& t);

/// The unique clan among the cross actions and Cayley transforms through
/// alpha or beta with the reversed tau pattern.
Clan rank2_clan(const Rank2Op& op, const Clan& c);

/// Tableau version. The three dominoes carrying the labels involved are
/// rearranged inside the squares they cover; for the pair b, a3 a
/// rearrangement that moves dominoes is followed by moving through the
/// cycle of the 3-domino when that cycle is closed.
DominoTableau rank2_tableau(const Rank2Op& op, const DominoTableau& t);

/// Operators attached to the D4 subsystem {b, a2, a3, a4}.
enum class Rank4Direction { D_to_beta, beta_to_D };

struct Rank4Op {
  Rank4Direction direction = Rank4Direction::D_to_beta;
  friend bool operator==(const Rank4Op&, const Rank4Op&) = default;
};

/// tau restricted to {b, a2, a3, a4}: {a3, a4} for the source of D_to_beta,
/// {a3} for its target.
enum class Rank4Type { A_beta, D, neither };
Rank4Type rank4_type(const std::vector<SimpleRoot>& tau);

/// One or two tableaux, sorted. Throws DomainError outside the domain.
std::vector<DominoTableau> rank4_tableau(const Rank4Op& op, const DominoTableau& t);
bool in_domain(const Rank4Op& op, const DominoTableau& t);

/// Whether indices 1..4 are paired only among themselves.
bool closed_on_first_four(const Clan& c);

/// One or two clans, sorted. When indices 1..4 are paired among themselves
/// the explicit exchange (1,e)(3,e') <-> (1,3)^(-ee') is used. Otherwise the
/// image is found among the clans reachable through cross actions and Cayley
/// transforms for the D4 roots, keeping those with the target type, the same
/// parity and associated variety, and a tableau in the tableau image.
std::vector<Clan> rank4_clan(const Rank4Op& op, const Clan& c);
bool in_domain(const Rank4Op& op, const Clan& c);

/// Operator names as used on the command line: "T:a2,a3", "T:b,a3",
/// "T:D,b" (D_to_beta) and "T:b,D" (beta_to_D).
struct OperatorSpec {
  bool rank4 = false;
  Rank2Op rank2{SimpleRoot::fork(), SimpleRoot::chain(3)};
  Rank4Op rank4_op;
};
OperatorSpec parse_operator(std::string_view text);
std::string operator_name(const Rank2Op& op);
std::string operator_name(const Rank4Op& op);

/// Labelled edge of the cell graph.
struct CellEdge {
  Clan from;
  Clan to;
  std::string op;
  friend bool operator==(const CellEdge&, const CellEdge&) = default;
};

struct Cell {
  std::vector<Clan> members; // sorted
  /// Distinct tableau shapes and normalized orbit labels among the images of
  /// the members. Each should hold exactly one value.
  std::vector<Shape> shapes;
  std::vector<OrbitDescriptor> orbits;
};

struct CellPartition {
  int rank = 0;
  std::vector<Cell> cells;      // ordered by smallest member
  std::vector<CellEdge> edges;  // sorted, each application listed once
};

/// Cells of the even clans of rank n: connected components under every
/// defined rank 2 and rank 4 operator application. Throws DomainError if n
/// exceeds max_n, InvariantError if an operator leaves the even clans.
CellPartition cells(int n, int max_n = 6);

} // namespace sostar
