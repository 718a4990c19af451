#pragma once

#include <synprod/hdp.hpp>

#include <vector>

namespace fixture {

using synprod::Symbol;

/// Routes of the four-container example with a 15-state product.
inline const std::vector<std::vector<Symbol>> kFeasibleRoutes{{2, 1, 3, 1, 4, 1}, {4, 1, 2, 3, 1}, {2, 4, 1}, {3, 4, 1}};

/// Routes whose product is empty: no column sequence satisfies every row.
inline const std::vector<std::vector<Symbol>> kEmptyRoutes{{2, 1, 3, 1, 4, 1}, {3, 4, 1}, {4, 1, 2, 3, 1}, {4, 2, 1}};

struct TableRow {
  std::vector<Symbol> tuple;
  Symbol global;
};

inline const std::vector<TableRow> kFeasibleTable{
    {{1, 2, 4, 3}, 1}, {{1, 3, 2, 4}, 2}, {{1, 4, 2, 3}, 3}, {{2, 1, 4, 3}, 4}, {{2, 3, 1, 4}, 5},
    {{3, 1, 2, 4}, 6}, {{3, 2, 1, 4}, 7}, {{3, 4, 2, 1}, 8}, {{4, 1, 2, 3}, 9}, {{4, 3, 2, 1}, 10}};

inline const std::vector<synprod::Word> kFeasibleMinimalSolutions{{4, 1, 7, 2, 10, 9, 3}, {5, 2, 6, 8, 3, 9, 1}};

/// Capacity rows of the first minimal solution, as (coefficients, rhs).
inline const std::vector<synprod::milp::Row> kFirstSolutionRows{
    {{8, 0, 0, 0, 0, 0, 0}, 900},
    {{0, 0, 15, 0, 0, 0, 0}, 900},
    {{0, 0, 0, 0, 34, 34, 0}, 900},
    {{0, 8, 8, 15, 15, 0, 0}, 900},
    {{0, 0, 0, 0, 0, 0, 34}, 900},
    {{34, 34, 0, 8, 8, 8, 8}, 900},
    {{15, 15, 34, 34, 0, 15, 15}, 900},
};

inline synprod::hdp::Instance a4() {
  return synprod::hdp::parse_instances(
             "instance(a4, 6, [900,900,900,900], [8,15,34], [[2,1,3,1,4,1],[4,1,2,3,1],[2,4,1],[3,4,1]], 1000).")
      .front();
}

}  // namespace fixture
