// Shared fixtures: the reference ideal I = (x^2y + z^3, xyz, yz^2) and the
// hand-checked Betti tables its power/gin/lexgin systems must reproduce.
#pragma once

#include <array>
#include <map>
#include <tuple>
#include <vector>

#include "betti/betti_table.hpp"
#include "betti/parse.hpp"

namespace fixtures {

inline betti::QIdeal reference_ideal() {
  auto prob = betti::parse_problem(
      "ring: x, y, z\nideal: x^2*y + z^3, x*y*z, y*z^2\n");
  return prob.ideal;
}

inline betti::BettiTable make_table(
    const std::vector<std::tuple<int, int, long long>>& entries) {
  betti::BettiTable T;
  for (auto [i, j, v] : entries) T.set(i, j, v);
  return T;
}

// beta(I^k), k = 1..6
inline const std::map<int, betti::BettiTable>& power_tables() {
  static const std::map<int, betti::BettiTable> tables = {
      {1, make_table({{0, 3, 3}, {1, 4, 1}, {1, 5, 1}})},
      {2, make_table({{0, 6, 6}, {1, 7, 4}, {1, 8, 1}})},
      {3, make_table({{0, 9, 10}, {1, 10, 9}, {2, 11, 1}, {1, 11, 1}})},
      {4, make_table({{0, 12, 15}, {1, 13, 16}, {2, 14, 3}, {1, 14, 1}})},
      {5, make_table({{0, 15, 21}, {1, 16, 25}, {2, 17, 6}, {1, 17, 1}})},
      {6, make_table({{0, 18, 28}, {1, 19, 36}, {2, 20, 10}, {1, 20, 1}})},
  };
  return tables;
}

// beta(gin(I^k)) under grevlex, k = 1..6
inline const std::map<int, betti::BettiTable>& gin_tables() {
  static const std::map<int, betti::BettiTable> tables = {
      {1, make_table({{0, 3, 3}, {1, 4, 2}, {0, 4, 1}, {1, 5, 1}})},
      {2, make_table({{0, 6, 6}, {1, 7, 5}, {0, 7, 1}, {1, 8, 1}})},
      {3, make_table({{0, 9, 10}, {1, 10, 10}, {2, 11, 1}, {0, 10, 1}, {1, 11, 1}})},
      {4, make_table({{0, 12, 15}, {1, 13, 17}, {2, 14, 3}, {0, 13, 1}, {1, 14, 1}})},
      {5, make_table({{0, 15, 21}, {1, 16, 26}, {2, 17, 6}, {0, 16, 1}, {1, 17, 1}})},
      {6, make_table({{0, 18, 28}, {1, 19, 37}, {2, 20, 10}, {0, 19, 1}, {1, 20, 1}})},
  };
  return tables;
}

// beta(lexgin(I^k)), k = 1..3, given as display rows (row, col0, col1, col2):
// the entry in column i of display row j is beta_{i, i+j}.
inline betti::BettiTable lexgin_table_from_rows(
    int first_row, const std::vector<std::array<long long, 3>>& rows) {
  betti::BettiTable T;
  for (std::size_t s = 0; s < rows.size(); ++s) {
    const int row = first_row + static_cast<int>(s);
    for (int i = 0; i < 3; ++i)
      if (rows[s][i]) T.set(i, i + row, rows[s][i]);
  }
  return T;
}

inline const std::map<int, betti::BettiTable>& lexgin_tables() {
  static const std::map<int, betti::BettiTable> tables = {
      {1, lexgin_table_from_rows(3, {{3, 3, 1}, {2, 3, 1}, {1, 2, 1}, {1, 1, 0}})},
      {2, lexgin_table_from_rows(6, {{6, 8, 3},
                                     {4, 7, 3},
                                     {3, 5, 2},
                                     {2, 4, 2},
                                     {2, 3, 1},
                                     {1, 2, 1},
                                     {1, 1, 0}})},
      {3, lexgin_table_from_rows(9, {{10, 15, 6},
                                     {6, 10, 4},
                                     {4, 8, 4},
                                     {4, 7, 3},
                                     {3, 6, 3},
                                     {3, 5, 2},
                                     {2, 4, 2},
                                     {2, 3, 1},
                                     {1, 2, 1},
                                     {1, 1, 0}})},
  };
  return tables;
}

// beta_{2,3k+2}(in(I^k)) for k = 3..10
inline const std::map<int, long long>& initial_corner_values() {
  static const std::map<int, long long> vals = {{3, 2},  {4, 4},  {5, 8},  {6, 12},
                                                {7, 18}, {8, 24}, {9, 32}, {10, 40}};
  return vals;
}

}  // namespace fixtures
