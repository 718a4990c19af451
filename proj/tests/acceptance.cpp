// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <synprod/cli.hpp>
#include <synprod/corpus.hpp>
#include <synprod/gac_check.hpp>
#include <synprod/hdp.hpp>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "support/random_models.hpp"

#include <fmt/format.h>

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

using namespace synprod;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back(what);
    }
  }
};

int failures = 0;

void report(int id, const std::string& title, const Outcome& o) {
  std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << title;
  if (!o.pass) {
    std::cout << " [";
    for (std::size_t k = 0; k < o.notes.size() && k < 8; ++k) std::cout << (k ? "; " : "") << o.notes[k];
    if (o.notes.size() > 8) std::cout << "; +" << o.notes.size() - 8 << " more";
    std::cout << ']';
    ++failures;
  }
  std::cout << std::endl;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  return {std::istreambuf_iterator<char>(in), {}};
}

struct CorpusRun {
  std::vector<hdp::Instance> instances;
  std::vector<hdp::Solution> solutions;
  double seconds = 0;
};

CorpusRun solve_corpus() {
  CorpusRun run;
  run.instances = hdp::parse_instances(std::string(hdp::kBundledInstances));
  auto t0 = std::chrono::steady_clock::now();
  for (const auto& inst : run.instances) run.solutions.push_back(hdp::solve_instance(inst));
  run.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return run;
}

void criterion_1(const CorpusRun& run, const std::vector<hdp::SolutionRecord>& expected) {
  Outcome o;
  std::map<std::string, std::int64_t> opt;
  for (const auto& r : expected) opt[r.id] = r.solution.opt;
  o.expect(run.instances.size() == 118, fmt::format("{} instances parsed", run.instances.size()));
  o.expect(opt.size() == 118, fmt::format("{} reference records", opt.size()));
  std::size_t infeasible = 0;
  for (std::size_t k = 0; k < run.instances.size(); ++k) {
    const auto& id = run.instances[k].id;
    auto it = opt.find(id);
    if (it == opt.end()) {
      o.expect(false, id + " has no reference");
      continue;
    }
    o.expect(run.solutions[k].opt == it->second,
             fmt::format("{}: got {} expected {}", id, run.solutions[k].opt, it->second));
    infeasible += run.solutions[k].infeasible;
  }
  o.expect(infeasible == 11, fmt::format("{} infeasible instances", infeasible));
  o.expect(run.seconds <= 60.0, fmt::format("corpus took {:.1f} s", run.seconds));
  report(1, fmt::format("corpus optima match for 118 instances ({:.1f} s)", run.seconds), o);
}

void criterion_2(const CorpusRun& run) {
  Outcome o;
  std::size_t checked = 0;
  for (std::size_t k = 0; k < run.instances.size(); ++k) {
    if (run.solutions[k].infeasible) continue;
    ++checked;
    o.expect(hdp::validate_solution(run.instances[k], run.solutions[k]), run.instances[k].id + " witness invalid");
  }
  report(2, fmt::format("{} feasible witnesses validate", checked), o);
}

void criterion_3() {
  Outcome o;
  auto rows = hdp::build_row_automata(fixture::kFeasibleRoutes);
  std::vector<std::size_t> sizes;
  for (const auto& r : rows) sizes.push_back(r.state_count());
  o.expect(sizes == std::vector<std::size_t>{7, 29, 13, 13}, "row automaton sizes");

  auto reduced = reduce_product(synchronised_product(rows, AllDifferentConstraint(4)));
  o.expect(reduced.dfa.state_count() == 15, fmt::format("{} product states", reduced.dfa.state_count()));
  o.expect(reduced.table.global_letter_count() == 10, "global letter count");

  // Rename our letters through the tuples they stand for.
  std::map<LetterTuple, Symbol> reference;
  for (const auto& row : fixture::kFeasibleTable) reference[row.tuple] = row.global;
  std::map<Symbol, Symbol> rename;
  bool consistent = true;
  for (const auto& row : reduced.table.rows) {
    auto it = reference.find(row.tuple);
    if (it == reference.end()) {
      consistent = false;
      continue;
    }
    auto [pos, inserted] = rename.emplace(row.global, it->second);
    consistent = consistent && (inserted || pos->second == it->second);
  }
  o.expect(consistent && reference.size() == reduced.table.size(), "letter table differs");
  std::set<Word> renamed;
  auto words = enumerate_minimal_solutions(reduced.dfa);
  for (auto w : words) {
    for (auto& g : w) g = rename.count(g) ? rename[g] : -1;
    renamed.insert(w);
  }
  o.expect(words.size() == 2, fmt::format("{} minimal solutions", words.size()));
  o.expect(renamed == std::set<Word>(fixture::kFeasibleMinimalSolutions.begin(),
                                     fixture::kFeasibleMinimalSolutions.end()),
           "minimal solutions differ");
  o.expect(collect_stats(rows, reduced.dfa, reduced.table).in_states_product == 34307.0, "in-states product");
  report(3, "four-container fixture (7,29,13,13 -> 15 states, 10 letters, 2 minimal solutions)", o);
}

void criterion_4() {
  Outcome o;
  auto rows = hdp::build_row_automata(fixture::kEmptyRoutes);
  auto reduced = reduce_product(synchronised_product(rows, AllDifferentConstraint(4)));
  o.expect(reduced.empty(), "product not empty");
  o.expect(enumerate_minimal_solutions(reduced.dfa).empty(), "minimal solutions exist");

  auto a6 = hdp::parse_instances(
                "instance(a6, 6, [900,900,900,900], [8,15,34], [[2,1,3,1,4,1],[4,1,2,3,1],[4,2,1],[3,4,1]], 1000).")
                .front();
  hdp::SolveReport rep;
  auto sol = hdp::solve_instance(a6, &rep);
  o.expect(sol.infeasible && sol.opt == 0, "instance not reported infeasible");
  o.expect(rep.empty_products == rep.route_systems, "some product non-empty");
  o.expect(rep.models == 0, fmt::format("{} models solved", rep.models));
  report(4, "empty product proves infeasibility without search", o);
}

struct Expected {
  std::size_t products, infeasible;
  double in_min, in_max, in_mean, in_s;
  double out_max, out_mean, out_s;
  double alpha_max, alpha_mean, alpha_s;
};

void criterion_5(const std::vector<cli::StatsBlock>& blocks) {
  Outcome o;
  auto near = [](double got, double want) { return std::abs(std::round(got * 10) / 10 - want) <= 0.05 + 1e-9; };
  const std::map<std::size_t, Expected> table{
      {3, {82, 2, 196, 1805, 437.7, 435.5, 13, 5.6, 2.6, 6, 3.5, 1.3}},
      {4, {179, 81, 2058, 229593, 29920.3, 37359.4, 61, 6.4, 9.0, 24, 4.2, 4.7}},
  };
  for (const auto& [m, e] : table) {
    auto it = std::find_if(blocks.begin(), blocks.end(), [m = m](const auto& b) { return b.containers == m; });
    if (it == blocks.end()) {
      o.expect(false, fmt::format("no block for m={}", m));
      continue;
    }
    auto s = aggregate(it->products);
    auto tag = [m = m](const char* f, double got) { return fmt::format("m={} {} = {}", m, f, got); };
    o.expect(s.count == e.products, tag("products", static_cast<double>(s.count)));
    o.expect(s.infeasible == e.infeasible, tag("infeasible", static_cast<double>(s.infeasible)));
    o.expect(s.in_states.min == e.in_min, tag("in min", s.in_states.min));
    o.expect(s.in_states.max == e.in_max, tag("in max", s.in_states.max));
    o.expect(near(s.in_states.mean, e.in_mean), tag("in mean", s.in_states.mean));
    o.expect(near(s.in_states.population_stddev, e.in_s), tag("in s", s.in_states.population_stddev));
    o.expect(s.out_states.min == 0, tag("out min", s.out_states.min));
    o.expect(s.out_alphabet.min == 0, tag("alphabet min", s.out_alphabet.min));
    o.expect(s.out_states.max == e.out_max, tag("out max", s.out_states.max));
    o.expect(near(s.out_states.mean, e.out_mean), tag("out mean", s.out_states.mean));
    o.expect(near(s.out_states.population_stddev, e.out_s), tag("out s", s.out_states.population_stddev));
    o.expect(s.out_alphabet.max == e.alpha_max, tag("alphabet max", s.out_alphabet.max));
    o.expect(near(s.out_alphabet.mean, e.alpha_mean), tag("alphabet mean", s.out_alphabet.mean));
    o.expect(near(s.out_alphabet.population_stddev, e.alpha_s), tag("alphabet s", s.out_alphabet.population_stddev));
  }
  report(5, "product statistics per container count", o);
}

void criterion_6() {
  Outcome o;
  auto rep = run_gac_check(20240501, 500);
  o.expect(rep.cases - rep.skipped >= 500, fmt::format("only {} compared", rep.cases - rep.skipped));
  o.expect(rep.mismatches == 0, fmt::format("{} mismatches", rep.mismatches));
  report(6, fmt::format("propagation equals exhaustive supports on {} random systems", rep.cases - rep.skipped), o);
}

void criterion_7() {
  Outcome o;
  std::mt19937_64 rng(8675309);
  std::size_t feasible = 0;
  for (int k = 0; k < 250; ++k) {
    auto m = oracle::random_model(rng);
    auto expected = oracle::enumerate_milp(m);
    auto got = milp::solve_milp(m);
    if (!expected) {
      o.expect(got.status == milp::Status::Infeasible, fmt::format("model {} should be infeasible", k));
      continue;
    }
    ++feasible;
    o.expect(got.status == milp::Status::Optimal && got.objective == expected->objective,
             fmt::format("model {}: got {} expected {}", k, got.objective, expected->objective));
  }

  auto inst = fixture::a4();
  auto rows = hdp::build_row_automata(fixture::kFeasibleRoutes);
  auto reduced = reduce_product(synchronised_product(rows, AllDifferentConstraint(4)));
  auto plans = hdp::expand_plans(reduced.table, fixture::kFeasibleMinimalSolutions[0]);
  if (plans.size() != 1) {
    o.expect(false, fmt::format("{} plans for the first minimal solution", plans.size()));
  } else {
    auto model = hdp::build_model(plans[0], inst);
    auto sorted = [](std::vector<milp::Row> r) {
      std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.coefficients < b.coefficients; });
      return r;
    };
    o.expect(sorted(model.rows) == sorted(fixture::kFirstSolutionRows), "capacity rows differ");
    o.expect(model.lower_bounds == std::vector<std::int64_t>(7, 6), "lower bounds differ");
    o.expect(milp::solve_milp(model).objective == 64, "optimum of the first minimal solution");
  }
  report(7, fmt::format("exact integer optimum on 250 random models ({} feasible) and the 7-row capacity model",
                        feasible),
         o);
}

void criterion_8(const CorpusRun& run) {
  Outcome o;
  std::size_t products = 0, networks = 0;
  for (const auto& inst : run.instances) {
    const AllDifferentConstraint alldiff(inst.containers());
    for (const auto& rs : hdp::expand_permutations(inst)) {
      auto reduced = reduce_product(synchronised_product(hdp::build_row_automata(rs), alldiff));
      ++products;
      o.expect(has_only_self_loop_cycles(reduced.dfa), inst.id + " product has a long cycle");
      std::set<std::size_t> lengths{1};
      if (!reduced.empty())
        for (const auto& w : enumerate_minimal_solutions(reduced.dfa)) lengths.insert(w.size());
      for (auto n : lengths) {
        ++networks;
        o.expect(check_berge_acyclic(build_decomposition(reduced, n)), inst.id + " network not Berge-acyclic");
      }
    }
  }

  std::mt19937_64 rng(1234);
  for (int k = 0; k < 300; ++k) {
    auto d = random_dfa(rng, 4, 3);
    std::vector<Symbol> sigma(d.alphabet().begin(), d.alphabet().end());
    auto mn = minimize(d);
    o.expect(minimize(mn) == mn, fmt::format("random automaton {} not idempotent", k));
    o.expect(oracle::language(mn, sigma, 6) == oracle::language(d, sigma, 6),
             fmt::format("random automaton {} changed language", k));
  }
  for (int k = 0; k < 200; ++k) {
    auto sys = random_system(rng);
    std::vector<Dfa> minimal;
    for (const auto& r : sys.rows) minimal.push_back(minimize(r));
    ++networks;
    auto net = build_decomposition(reduce_product(synchronised_product(minimal, *sys.constraint)), sys.n);
    o.expect(check_berge_acyclic(net), fmt::format("random network {} not Berge-acyclic", k));
  }
  report(8,
         fmt::format("{} corpus products self-loop only, {} networks Berge-acyclic, minimize idempotent and "
                     "language-preserving",
                     products, networks),
         o);
}

}  // namespace

int main() {
  auto expected = hdp::parse_solution_lines(read_file(SYNPROD_SOURCE_DIR "/tests/data/reference_solutions.txt"));
  auto run = solve_corpus();
  criterion_1(run, expected);
  criterion_2(run);
  criterion_3();
  criterion_4();
  criterion_5(cli::corpus_stats(run.instances));
  criterion_6();
  criterion_7();
  criterion_8(run);
  std::cout << (failures == 0 ? "all criteria passed" : fmt::format("{} criteria failed", failures)) << std::endl;
  return failures == 0 ? 0 : 1;
}
