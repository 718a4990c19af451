#pragma once

// Command implementations behind the `synprod` executable. Each command
// writes to the given streams and returns a process exit status.

#include <synprod/corpus.hpp>
#include <synprod/decomposition.hpp>
#include <synprod/gac_check.hpp>
#include <synprod/hdp.hpp>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <map>
#include <nlohmann/json.hpp>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace synprod::cli {

enum class Command { Solve, Stats, Export, GacCheck };
enum class Format { Text, Json, Dot, Csv };

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitPropertyFailure = 2;

struct RunConfig {
  Command command = Command::Solve;
  std::optional<std::string> instance;  // empty: every instance
  std::optional<std::string> input;     // empty: bundled corpus
  Format format = Format::Text;
  std::uint64_t seed = 1;
  std::size_t jobs = 1;
  // export
  std::size_t combo = 0;
  std::size_t columns = 0;  // 0: length of the first minimal solution
  std::optional<std::string> output;
  // gac-check
  std::size_t cases = 500;
};

struct Streams {
  std::ostream& out;
  std::ostream& err;
};

inline std::optional<Format> parse_format(const std::string& s) {
  static const std::map<std::string, Format> names{
      {"text", Format::Text}, {"json", Format::Json}, {"dot", Format::Dot}, {"csv", Format::Csv}};
  auto it = names.find(s);
  if (it == names.end()) return std::nullopt;
  return it->second;
}

namespace detail {

inline std::optional<std::vector<hdp::Instance>> load(const RunConfig& cfg, std::ostream& err) {
  try {
    if (!cfg.input) return hdp::parse_instances(std::string(hdp::kBundledInstances));
    std::ifstream in(*cfg.input);
    if (!in) {
      err << "error: cannot read " << *cfg.input << '\n';
      return std::nullopt;
    }
    return hdp::parse_instances(in);
  } catch (const hdp::ParseError& e) {
    err << "error: " << (cfg.input ? *cfg.input : std::string("<bundled>")) << ": " << e.what() << '\n';
    return std::nullopt;
  }
}

/// Instances selected by the filter, or nullopt after reporting an unknown id.
inline std::optional<std::vector<hdp::Instance>> select(const RunConfig& cfg, std::vector<hdp::Instance> all,
                                                        std::ostream& err) {
  if (!cfg.instance) return all;
  for (auto& inst : all)
    if (inst.id == *cfg.instance) return std::vector<hdp::Instance>{std::move(inst)};
  err << "error: unknown instance '" << *cfg.instance << "'\n";
  return std::nullopt;
}

}  // namespace detail

inline hdp::SolutionRecord solve_timed(const hdp::Instance& inst) {
  auto t0 = std::chrono::steady_clock::now();
  hdp::SolutionRecord rec{inst.id, 0, hdp::solve_instance(inst)};
  rec.time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
  return rec;
}

/// Solves every instance, using up to `jobs` threads; results keep input order.
inline std::vector<hdp::SolutionRecord> solve_all(const std::vector<hdp::Instance>& insts, std::size_t jobs) {
  std::vector<hdp::SolutionRecord> out(insts.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < insts.size();) out[i] = solve_timed(insts[i]);
  };
  jobs = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(1, insts.size()));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return out;
}

inline int cmd_solve(const RunConfig& cfg, Streams io) {
  if (cfg.format != Format::Text && cfg.format != Format::Json) {
    io.err << "error: solve supports --format text or json\n";
    return kExitUsage;
  }
  auto all = detail::load(cfg, io.err);
  if (!all) return kExitUsage;
  auto insts = detail::select(cfg, std::move(*all), io.err);
  if (!insts) return kExitUsage;

  auto records = solve_all(*insts, cfg.jobs);
  if (cfg.format == Format::Json) {
    auto arr = nlohmann::json::array();
    for (const auto& r : records) arr.push_back(hdp::to_json(r));
    io.out << arr.dump(2) << '\n';
  } else {
    for (const auto& r : records) io.out << hdp::format_solution_line(r) << '\n';
  }
  return kExitOk;
}

struct StatsBlock {
  std::size_t containers = 0;
  std::size_t instances = 0;
  std::vector<ProductStats> products;
};

/// Product statistics for every route system of every instance, by container count.
inline std::vector<StatsBlock> corpus_stats(const std::vector<hdp::Instance>& insts) {
  std::map<std::size_t, StatsBlock> blocks;
  for (const auto& inst : insts) {
    auto& b = blocks[inst.containers()];
    b.containers = inst.containers();
    ++b.instances;
    const AllDifferentConstraint alldiff(inst.containers());
    for (const auto& rs : hdp::expand_permutations(inst)) {
      auto rows = hdp::build_row_automata(rs);
      auto reduced = reduce_product(synchronised_product(rows, alldiff));
      b.products.push_back(collect_stats(rows, reduced.dfa, reduced.table));
    }
  }
  std::vector<StatsBlock> out;
  for (auto& [m, b] : blocks) out.push_back(std::move(b));
  return out;
}

inline int cmd_stats(const RunConfig& cfg, Streams io) {
  auto all = detail::load(cfg, io.err);
  if (!all) return kExitUsage;
  auto insts = detail::select(cfg, std::move(*all), io.err);
  if (!insts) return kExitUsage;

  auto blocks = corpus_stats(*insts);
  if (cfg.format == Format::Json) {
    auto field = [](const FieldSummary& f) {
      return nlohmann::json{{"min", f.min},
                            {"max", f.max},
                            {"mean", f.mean},
                            {"stddev", f.stddev},
                            {"population_stddev", f.population_stddev}};
    };
    auto arr = nlohmann::json::array();
    for (const auto& b : blocks) {
      auto s = aggregate(b.products);
      arr.push_back({{"containers", b.containers},
                     {"instances", b.instances},
                     {"products", s.count},
                     {"infeasible", s.infeasible},
                     {"in_states", field(s.in_states)},
                     {"out_states", field(s.out_states)},
                     {"out_alphabet", field(s.out_alphabet)}});
    }
    io.out << arr.dump(2) << '\n';
    return kExitOk;
  }
  if (cfg.format != Format::Text) {
    io.err << "error: stats supports --format text or json\n";
    return kExitUsage;
  }
  for (const auto& b : blocks) {
    auto s = aggregate(b.products);
    auto line = [&](const char* label, const FieldSummary& f) {
      fmt::print(io.out, "{}min = {} max = {} mean = {} std dev = {}\n", label, f.min, f.max, f.mean,
                 f.population_stddev);
    };
    fmt::print(io.out, "Nb instance with {} containers is {}\n", b.containers, b.instances);
    fmt::print(io.out, "Nb product with {} containers is {}\n", b.containers, s.count);
    fmt::print(io.out, "Nb product with 0 solutions = {}\n", s.infeasible);
    line("In  states:   ", s.in_states);
    line("Out states:   ", s.out_states);
    line("Out alphabet: ", s.out_alphabet);
  }
  return kExitOk;
}

inline constexpr const char* kEmptyMarker = "empty automaton\n";

inline int cmd_export(const RunConfig& cfg, Streams io) {
  if (cfg.format == Format::Text) {
    io.err << "error: export needs --format dot, csv or json\n";
    return kExitUsage;
  }
  if (!cfg.instance) {
    io.err << "error: export needs --instance\n";
    return kExitUsage;
  }
  auto all = detail::load(cfg, io.err);
  if (!all) return kExitUsage;
  auto insts = detail::select(cfg, std::move(*all), io.err);
  if (!insts) return kExitUsage;
  const auto& inst = insts->front();

  auto systems = hdp::expand_permutations(inst);
  if (cfg.combo >= systems.size()) {
    io.err << "error: instance " << inst.id << " has " << systems.size() << " route systems, --combo "
           << cfg.combo << " is out of range\n";
    return kExitUsage;
  }
  auto rows = hdp::build_row_automata(systems[cfg.combo]);
  auto reduced = reduce_product(synchronised_product(rows, AllDifferentConstraint(inst.containers())));

  std::ostringstream body;
  if (reduced.empty()) {
    io.err << "warning: product of " << inst.id << " route system " << cfg.combo << " is empty\n";
    body << kEmptyMarker;
  } else if (cfg.format == Format::Dot) {
    write_dot(body, reduced.dfa, inst.id);
  } else if (cfg.format == Format::Csv) {
    write_table_csv(body, reduced.table);
  } else {
    std::size_t n = cfg.columns;
    if (n == 0) {
      auto words = enumerate_minimal_solutions(reduced.dfa);
      n = words.empty() ? 1 : words.front().size();
    }
    body << to_json(build_decomposition(reduced, n)).dump(2) << '\n';
  }

  if (cfg.output) {
    std::ofstream f(*cfg.output);
    if (!(f << body.str())) {
      io.err << "error: cannot write " << *cfg.output << '\n';
      return kExitUsage;
    }
  } else {
    io.out << body.str();
  }
  return kExitOk;
}

inline int cmd_gac_check(const RunConfig& cfg, Streams io,
                         const std::function<void(DomainState&)>& tamper = {}) {
  auto rep = run_gac_check(cfg.seed, cfg.cases, {}, tamper);
  if (cfg.format == Format::Json) {
    io.out << nlohmann::json{{"seed", cfg.seed},
                             {"cases", rep.cases},
                             {"skipped", rep.skipped},
                             {"mismatches", rep.mismatches},
                             {"mismatch_cases", rep.mismatch_cases}}
                  .dump(2)
           << '\n';
  } else {
    fmt::print(io.out, "seed = {} cases = {} skipped = {} mismatches = {}\n", cfg.seed, rep.cases, rep.skipped,
               rep.mismatches);
    for (auto c : rep.mismatch_cases) fmt::print(io.out, "mismatch in case {}\n", c);
  }
  return rep.mismatches == 0 ? kExitOk : kExitPropertyFailure;
}

inline int run(const RunConfig& cfg, Streams io) {
  switch (cfg.command) {
    case Command::Solve: return cmd_solve(cfg, io);
    case Command::Stats: return cmd_stats(cfg, io);
    case Command::Export: return cmd_export(cfg, io);
    case Command::GacCheck: return cmd_gac_check(cfg, io);
  }
  return kExitUsage;
}

}  // namespace synprod::cli
