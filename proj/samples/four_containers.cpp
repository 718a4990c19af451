// Builds the four-container product from the a4 routes, prints its letter
// table and minimal solutions, then solves the stage-duration model of each.

#include <synprod/hdp.hpp>

#include <iostream>

int main() {
  using namespace synprod;
  const std::vector<std::vector<Symbol>> routes{{2, 1, 3, 1, 4, 1}, {4, 1, 2, 3, 1}, {2, 4, 1}, {3, 4, 1}};
  auto rows = hdp::build_row_automata(routes);
  for (std::size_t i = 0; i < rows.size(); ++i)
    std::cout << "row " << i + 1 << ": " << rows[i].state_count() << " states\n";

  auto reduced = reduce_product(synchronised_product(rows, AllDifferentConstraint(rows.size())));
  std::cout << "reduced product: " << reduced.dfa.state_count() << " states, " << reduced.table.global_letter_count()
            << " letters\n";
  write_table_csv(std::cout, reduced.table);

  auto inst = hdp::parse_instances(
      "instance(a4, 6, [900,900,900,900], [8,15,34], [[2,1,3,1,4,1],[4,1,2,3,1],[2,4,1],[3,4,1]], 1000).");
  for (const auto& word : enumerate_minimal_solutions(reduced.dfa)) {
    std::cout << "minimal solution:";
    for (auto g : word) std::cout << ' ' << g;
    std::cout << '\n';
    for (const auto& plan : hdp::expand_plans(reduced.table, word)) {
      auto res = milp::solve_milp(hdp::build_model(plan, inst.front()));
      std::cout << "  cycle length " << res.objective << '\n';
    }
  }
}
