#pragma once

#include "sostar/clan.hpp"
#include "sostar/domino.hpp"
#include "sostar/signed_tableau.hpp"

#include <functional>
#include <vector>

namespace sostar {

/// Working pair during the construction: a domino tableau and a signed
/// tableau of the same doubled shape.
struct HState {
  DominoTableau t1;
  SignedTableau t2;

  /// Empty when shapes agree, are doubled, t1 is standard and every double
  /// row of t2 has a common start sign.
  std::vector<std::string> violations() const;
};

/// Result of the map: the domino tableau and the class of the signed tableau.
struct HPair {
  DominoTableau t1;
  SignedClass class2;

  friend bool operator==(const HPair&, const HPair&) = default;
  friend auto operator<=>(const HPair&, const HPair&) = default;
};

/// Adds the signed singleton (i, eps); i must exceed every label present.
HState insert_singleton(const HState& s, int i, Sign eps);
/// Adds the signed pair (i, j)^eps, i < j, j exceeding every label present.
HState insert_pair(const HState& s, int i, int j, Sign eps);

/// Replaces the working signed tableau by another member of its class
/// before each insertion step.
using RepresentativeChooser =
    std::function<SignedTableau(const DominoTableau& t1, const SignedTableau& t2)>;

HState hmap_state(const Clan& c, const RepresentativeChooser& choose = {});
HPair hmap(const Clan& c);
HPair hmap(const Clan& c, const RepresentativeChooser& choose);

/// Default guard on the rank accepted by exhaustive searches.
inline constexpr int kSearchRankLimit = 7;

/// All clans of rank n passing the filter whose image is p, found by
/// enumeration. Throws DomainError if n exceeds max_n or p is malformed.
std::vector<Clan> hmap_inverse(const HPair& p, int n, ClanFilter filter,
                               int max_n = kSearchRankLimit);

} // namespace sostar
