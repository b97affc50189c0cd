#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sostar {

/// A counterexample. `clan` is replayable through the CLI; `op` names the
/// operation that was checked.
struct Failure {
  std::string clan;
  std::string op;
  std::string expected;
  std::string actual;
  friend bool operator==(const Failure&, const Failure&) = default;
};

struct Report {
  std::string suite;
  int n = 0;
  std::int64_t checked = 0;
  std::vector<Failure> failures;
  /// Extra counts worth showing, e.g. how many double-image cases occurred.
  std::vector<std::pair<std::string, std::int64_t>> notes;

  bool passed() const { return failures.empty(); }
};

/// Rank bound for the exhaustive suites unless the caller widens it.
inline constexpr int kExhaustiveBound = 5;
/// Rank bound for the randomized suites.
inline constexpr int kRandomizedBound = 6;
/// Hard ceiling accepted by any suite.
inline constexpr int kVerifyCeiling = 7;

/// Clan tau-invariant against the tableau tau-invariant of its image.
Report check_tau(int n);

/// Injectivity, range description, and that the image size equals both the
/// number of clans and the number of admissible pairs (every standard domino
/// tableau of doubled shape with each of its signed classes).
Report check_bijection(int n);

/// Tableau transport for every rank 2 operator, and for the rank 4 operators
/// when n >= 4, compared as sets.
Report check_wallcross(int n);

/// Parity dichotomies of the image: flipping one odd double row switches the
/// parity of the preimage; on shapes with only even rows the preimage is
/// even exactly when the vertical domino count is divisible by 4.
Report check_corollary(int n);

/// Cross actions and Cayley transforms preserve clan parity.
Report check_parity_preservation(int n);

/// Random choices of class representative during the construction never
/// change the result.
Report check_representative_independence(int n, int trials, std::uint64_t seed);

/// Structural checks. On `trials` random standard tableaux, moving through
/// any cycle is an involution with the expected effect on shapes. On every
/// clan, cross actions satisfy the Coxeter relations of type D and Cayley
/// transforms invert each other.
Report check_structure(int n, int trials, std::uint64_t seed);

/// Cells of even clans have one tableau shape and one orbit label, and every
/// operator edge preserves the normalized orbit descriptor.
Report check_cells(int n);

/// Suite names accepted by run_suite, "all" excluded.
std::vector<std::string> suite_names();

/// Runs one suite (or "all") for every rank from 1 to max_n that the suite
/// supports. Throws DomainError for an unknown suite or a bound above the
/// ceiling.
std::vector<Report> run_suite(std::string_view suite, int max_n, std::uint64_t seed,
                              int trials = 1000);

} // namespace sostar
