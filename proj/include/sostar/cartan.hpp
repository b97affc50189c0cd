#pragma once

#include "sostar/clan.hpp"

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace sostar {

/// A simple root of type D_n in the coordinates e_1..e_n: either the fork
/// root e_1+e_2 or a chain root e_i - e_{i-1} (2 <= i <= n).
class SimpleRoot {
public:
  static constexpr SimpleRoot fork() noexcept { return SimpleRoot(1); }
  static constexpr SimpleRoot chain(int i) noexcept { return SimpleRoot(i); }

  constexpr bool is_fork() const noexcept { return i_ == 1; }
  /// For chain roots, the larger coordinate index i of e_i - e_{i-1}.
  constexpr int index() const noexcept { return i_; }
  bool valid_for(int n) const noexcept { return n >= 2 && i_ >= 1 && i_ <= n; }

  friend constexpr bool operator==(SimpleRoot, SimpleRoot) = default;
  friend constexpr auto operator<=>(SimpleRoot, SimpleRoot) = default;

private:
  constexpr explicit SimpleRoot(int i) : i_(i) {}
  int i_;
};

/// All simple roots for rank n, fork first then a2..an.
std::vector<SimpleRoot> simple_roots(int n);
/// "b" for the fork root, "a<i>" for chain roots.
std::string root_name(SimpleRoot r);
SimpleRoot parse_root(std::string_view text);
/// Whether the two roots are joined in the D_n Dynkin diagram.
bool adjacent(SimpleRoot a, SimpleRoot b);

/// Signed permutation of coordinate vectors: images[i] = +-j means
/// theta(e_i) = +-e_j. Index 0 is unused.
struct CartanInvolution {
  std::vector<int> images;
  friend bool operator==(const CartanInvolution&, const CartanInvolution&) = default;
};

enum class RootStatus {
  compact_imaginary,
  noncompact_imaginary,
  real,
  complex_theta_positive,
  complex_theta_negative,
};

std::string to_string(RootStatus s);

CartanInvolution theta_of_clan(const Clan& c);
RootStatus root_status(const Clan& c, SimpleRoot r);
/// Sorted (fork first) set of simple roots in the tau-invariant.
std::vector<SimpleRoot> tau_invariant(const Clan& c);
bool in_tau(const Clan& c, SimpleRoot r);

/// Cross action of the simple reflection through r.
Clan cross_action(SimpleRoot r, const Clan& c);
/// Cayley transform through a noncompact imaginary (one output) or real
/// (two outputs) root. Throws DomainError for other roots.
std::vector<Clan> cayley(SimpleRoot r, const Clan& c);
bool cayley_defined(const Clan& c, SimpleRoot r);

} // namespace sostar
