#pragma once

#include "sostar/domino.hpp"
#include "sostar/signed_tableau.hpp"

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace sostar::testing {

// Builds a tableau from rows of labels such as "1 1 2 2/3 3 4 4": each label
// names the two squares of its domino.
inline DominoTableau tableau(const std::string& rows) {
  std::map<int, std::vector<Square>> squares;
  std::istringstream in(rows);
  std::string row;
  int r = 0;
  while (std::getline(in, row, '/')) {
    ++r;
    std::istringstream cells(row);
    int label = 0;
    int c = 0;
    while (cells >> label) squares[label].push_back({r, ++c});
  }
  std::map<int, Domino> placement;
  for (const auto& [label, sq] : squares) {
    if (sq.size() != 2) throw std::invalid_argument("label " + std::to_string(label) + " needs two squares");
    placement[label] = Domino::of(sq[0], sq[1]);
  }
  return DominoTableau(placement);
}

// "+-" style start signs, one character per row.
inline SignedTableau signed_tableau(std::vector<int> parts, const std::string& starts) {
  SignedTableau t;
  t.shape = Shape{std::move(parts)};
  for (char ch : starts) t.start_signs.push_back(ch == '+' ? Sign::plus : Sign::minus);
  return t;
}

inline std::string rows_of(const DominoTableau& t) {
  std::string s = render(t);
  while (!s.empty() && s.back() == '\n') s.pop_back();
  for (auto& ch : s)
    if (ch == '\n') ch = '/';
  return s;
}

} // namespace sostar::testing
