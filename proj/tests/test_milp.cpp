#include <synprod/milp.hpp>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "support/random_models.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <sstream>

using namespace synprod::milp;

using oracle::random_model;

TEST_CASE("single variable relaxation", "[milp]") {
  auto m = MilpModel::uniform(1, 6);
  m.rows.push_back({{8}, 900});
  auto lp = solve_lp(m);
  REQUIRE(lp.status == Status::Optimal);
  CHECK(lp.objective == Rational(225, 2));
  auto ip = solve_milp(m);
  REQUIRE(ip.status == Status::Optimal);
  CHECK(ip.objective == 112);
}

TEST_CASE("integer optimum equals exhaustive enumeration", "[milp][property]") {
  std::mt19937_64 rng(4242);
  for (int rep = 0; rep < 300; ++rep) {
    auto m = random_model(rng);
    auto expected = oracle::enumerate_milp(m);
    auto got = solve_milp(m);
    if (!expected) {
      CHECK(got.status == Status::Infeasible);
      continue;
    }
    REQUIRE(got.status == Status::Optimal);
    CHECK(got.objective == expected->objective);
    // The witness is feasible and attains the objective.
    std::int64_t obj = 0;
    for (std::size_t k = 0; k < m.n_vars; ++k) {
      CHECK(got.values[k] >= m.lower_bounds[k]);
      if (m.upper_bounds[k]) CHECK(got.values[k] <= *m.upper_bounds[k]);
      obj += m.objective[k] * got.values[k];
    }
    CHECK(obj == got.objective);
    for (const auto& r : m.rows) {
      std::int64_t lhs = 0;
      for (std::size_t k = 0; k < m.n_vars; ++k) lhs += r.coefficients[k] * got.values[k];
      CHECK(lhs <= r.rhs);
    }
  }
}

TEST_CASE("relaxation bounds the integer optimum", "[milp][property]") {
  std::mt19937_64 rng(77);
  for (int rep = 0; rep < 100; ++rep) {
    auto m = random_model(rng);
    auto ip = solve_milp(m);
    auto lp = solve_lp(m);
    if (ip.status != Status::Optimal) continue;
    REQUIRE(lp.status == Status::Optimal);
    CHECK(Rational(ip.objective) <= lp.objective);
  }
}

TEST_CASE("capacity model of the first minimal solution", "[milp]") {
  auto m = MilpModel::uniform(7, 6);
  m.rows = fixture::kFirstSolutionRows;
  auto res = solve_milp(m);
  REQUIRE(res.status == Status::Optimal);
  CHECK(res.objective == 64);
}

TEST_CASE("infeasible bounds", "[milp]") {
  auto m = MilpModel::uniform(2, 10);
  m.rows.push_back({{1, 1}, 15});
  CHECK(solve_lp(m).status == Status::Infeasible);
  CHECK(solve_milp(m).status == Status::Infeasible);
  auto crossed = MilpModel::uniform(1, 5);
  crossed.upper_bounds[0] = 4;
  CHECK(solve_milp(crossed).status == Status::Infeasible);
}

TEST_CASE("model validation and unbounded relaxations", "[milp][errors]") {
  auto m = MilpModel::uniform(2, 0);
  m.rows.push_back({{1, 0}, 5});
  CHECK_THROWS_AS(solve_milp(m), UnboundedModel);
  m.objective[1] = 0;
  CHECK(solve_milp(m).objective == 5);

  auto bad = MilpModel::uniform(1, 0);
  bad.rows.push_back({{-1}, 5});
  CHECK_THROWS_AS(solve_lp(bad), std::invalid_argument);
  bad.rows = {{{1, 2}, 5}};
  CHECK_THROWS_AS(solve_lp(bad), std::invalid_argument);
  bad.rows = {{{1}, -1}};
  CHECK_THROWS_AS(solve_lp(bad), std::invalid_argument);
}

TEST_CASE("fractional vertices need branching", "[milp]") {
  // max x + y, 2x + 2y <= 5 has LP value 5/2 and integer optimum 2.
  auto m = MilpModel::uniform(2, 0);
  m.rows.push_back({{2, 2}, 5});
  auto lp = solve_lp(m);
  CHECK(lp.objective == Rational(5, 2));
  auto ip = solve_milp(m);
  CHECK(ip.objective == 2);
  CHECK(ip.nodes >= 1);
}

TEST_CASE("lp text format", "[milp]") {
  auto m = MilpModel::uniform(2, 6);
  m.rows.push_back({{8, 0}, 900});
  m.rows.push_back({{15, 34}, 900});
  m.upper_bounds[1] = 20;
  std::ostringstream os;
  write_lp(os, m);
  CHECK(os.str() ==
        "Maximize\n obj: p1 + p2\nSubject To\n c1: 8 p1 <= 900\n c2: 15 p1 + 34 p2 <= 900\n"
        "Bounds\n 6 <= p1\n 6 <= p2 <= 20\nGeneral\n p1 p2\nEnd\n");
}
