#pragma once

// Hydrogen distribution instances: parsing, route expansion, the automaton
// pipeline, per-plan duration models and solution checking.
//
// Location 1 is the production site, 2..loc are customers; there are as many
// containers as locations. Container 1 follows its visit sequence once from
// the start (it breaks the rotation symmetry), the others may start anywhere
// in their cycle. Stage indices are 0-based throughout.

#include <synprod/automata.hpp>
#include <synprod/milp.hpp>
#include <synprod/sync_product.hpp>

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <istream>
#include <iterator>
#include <nlohmann/json.hpp>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace synprod::hdp {

/// A visit-spec element: one location, or a group visited in any order.
using VisitItem = std::variant<Symbol, std::vector<Symbol>>;
using VisitSpec = std::vector<VisitItem>;
using Route = std::vector<Symbol>;
using LocationMatrix = std::vector<std::vector<Symbol>>;

inline constexpr Symbol kProduction = 1;

struct Instance {
  std::string id;
  std::int64_t reload_time = 0;
  std::vector<std::int64_t> capacities;  // per container
  std::vector<std::int64_t> demands;     // per customer location 2..loc
  std::vector<VisitSpec> visit_specs;    // per container
  std::int64_t upper_bound = 0;

  std::size_t containers() const { return capacities.size(); }
  std::size_t locations() const { return demands.size() + 1; }
  std::int64_t demand(Symbol location) const {
    return location == kProduction ? 0 : demands.at(static_cast<std::size_t>(location - 2));
  }
  friend bool operator==(const Instance&, const Instance&) = default;
};

/// One concrete route per container.
using RouteSystem = std::vector<Route>;

struct StagePlan {
  std::vector<LetterTuple> columns;  // per stage, one location per container
  LocationMatrix v;                  // v[i][k]: location of container i at stage k

  std::size_t stages() const { return columns.size(); }
};

struct Solution {
  bool infeasible = true;
  std::int64_t opt = 0;
  std::vector<std::int64_t> durations;
  LocationMatrix v;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// ---------------------------------------------------------------------------
// Tokenizer shared by the instance and solution-line readers.

namespace detail {

struct Token {
  enum class Kind { Ident, Int, Punct, End };
  Kind kind = Kind::End;
  std::string text;
  std::int64_t value = 0;
  std::size_t line = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string text) : src_(std::move(text)) { advance(); }

  const Token& peek() const { return tok_; }

  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

  void expect(char c) {
    if (tok_.kind != Token::Kind::Punct || tok_.text[0] != c)
      throw ParseError(tok_.line, std::string("expected '") + c + "' but found " + describe(tok_));
    advance();
  }

  bool accept(char c) {
    if (tok_.kind == Token::Kind::Punct && tok_.text[0] == c) {
      advance();
      return true;
    }
    return false;
  }

  std::int64_t integer(const char* field) {
    if (tok_.kind != Token::Kind::Int)
      throw ParseError(tok_.line, std::string("expected integer for ") + field + " but found " + describe(tok_));
    return take().value;
  }

  std::string ident(const char* field) {
    if (tok_.kind != Token::Kind::Ident)
      throw ParseError(tok_.line, std::string("expected identifier for ") + field + " but found " + describe(tok_));
    return take().text;
  }

  static std::string describe(const Token& t) {
    switch (t.kind) {
      case Token::Kind::End: return "end of input";
      case Token::Kind::Int: return "'" + std::to_string(t.value) + "'";
      default: return "'" + t.text + "'";
    }
  }

 private:
  void advance() {
    skip_blank();
    tok_ = Token{};
    tok_.line = line_;
    if (pos_ >= src_.size()) return;
    char c = src_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) ++pos_;
      tok_.kind = Token::Kind::Ident;
      tok_.text = src_.substr(start, pos_ - start);
    } else if (std::isdigit(static_cast<unsigned char>(c)) ||
               (c == '-' && pos_ + 1 < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_ + 1])))) {
      std::size_t start = pos_++;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      tok_.kind = Token::Kind::Int;
      tok_.text = src_.substr(start, pos_ - start);
      try {
        tok_.value = std::stoll(tok_.text);
      } catch (const std::out_of_range&) {
        throw ParseError(line_, "integer out of range: " + tok_.text);
      }
    } else if (std::string_view("()[],.=").find(c) != std::string_view::npos) {
      tok_.kind = Token::Kind::Punct;
      tok_.text = std::string(1, c);
      ++pos_;
    } else {
      throw ParseError(line_, std::string("unexpected character '") + c + "'");
    }
  }

  void skip_blank() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '\n') {
        ++line_;
        ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == '%') {
        while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
      } else if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '*') {
        pos_ += 2;
        while (pos_ + 1 < src_.size() && !(src_[pos_] == '*' && src_[pos_ + 1] == '/')) {
          if (src_[pos_] == '\n') ++line_;
          ++pos_;
        }
        pos_ = std::min(src_.size(), pos_ + 2);
      } else {
        break;
      }
    }
  }

  std::string src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  Token tok_;
};

inline std::vector<std::int64_t> int_list(Lexer& lx, const char* field) {
  std::vector<std::int64_t> out;
  lx.expect('[');
  if (lx.accept(']')) return out;
  do out.push_back(lx.integer(field));
  while (lx.accept(','));
  lx.expect(']');
  return out;
}

inline VisitSpec visit_spec(Lexer& lx) {
  VisitSpec spec;
  lx.expect('[');
  do {
    if (lx.peek().kind == Token::Kind::Punct && lx.peek().text == "[") {
      std::vector<Symbol> group;
      for (auto v : int_list(lx, "visited location")) group.push_back(static_cast<Symbol>(v));
      spec.emplace_back(std::move(group));
    } else {
      spec.emplace_back(static_cast<Symbol>(lx.integer("visited location")));
    }
  } while (lx.accept(','));
  lx.expect(']');
  return spec;
}

inline void check_instance(const Instance& inst, std::size_t line) {
  if (inst.capacities.empty()) throw ParseError(line, inst.id + ": no containers");
  if (inst.capacities.size() != inst.demands.size() + 1)
    throw ParseError(line, inst.id + ": expected one more container than customers");
  if (inst.visit_specs.size() != inst.capacities.size())
    throw ParseError(line, inst.id + ": expected one visit sequence per container");
  const auto loc = static_cast<Symbol>(inst.locations());
  auto in_range = [&](Symbol s) {
    if (s < 1 || s > loc) throw ParseError(line, inst.id + ": location " + std::to_string(s) + " out of range");
  };
  for (const auto& spec : inst.visit_specs) {
    if (spec.empty()) throw ParseError(line, inst.id + ": empty visit sequence");
    for (const auto& item : spec) {
      if (auto s = std::get_if<Symbol>(&item)) in_range(*s);
      else {
        const auto& g = std::get<std::vector<Symbol>>(item);
        if (g.empty()) throw ParseError(line, inst.id + ": empty location group");
        for (Symbol x : g) in_range(x);
      }
    }
  }
}

}  // namespace detail

/// Reads `instance(Id, R, [C..], [D..], [[spec]..], UB).` facts.
inline std::vector<Instance> parse_instances(const std::string& text) {
  detail::Lexer lx(text);
  std::vector<Instance> out;
  while (lx.peek().kind != detail::Token::Kind::End) {
    std::size_t line = lx.peek().line;
    std::string head = lx.ident("fact name");
    if (head != "instance") throw ParseError(line, "expected 'instance' fact but found '" + head + "'");
    Instance inst;
    lx.expect('(');
    inst.id = lx.ident("instance id");
    lx.expect(',');
    inst.reload_time = lx.integer("reload time");
    lx.expect(',');
    inst.capacities = detail::int_list(lx, "capacity");
    lx.expect(',');
    inst.demands = detail::int_list(lx, "demand");
    lx.expect(',');
    lx.expect('[');
    do inst.visit_specs.push_back(detail::visit_spec(lx));
    while (lx.accept(','));
    lx.expect(']');
    lx.expect(',');
    inst.upper_bound = lx.integer("upper bound");
    lx.expect(')');
    lx.expect('.');
    detail::check_instance(inst, line);
    out.push_back(std::move(inst));
  }
  return out;
}

inline std::vector<Instance> parse_instances(std::istream& in) {
  return parse_instances(std::string(std::istreambuf_iterator<char>(in), {}));
}

// ---------------------------------------------------------------------------
// Routes and automata

/// Every way of ordering the groups, containers left to right, each group's
/// permutations in lexicographic order (the first container varies slowest).
inline std::vector<RouteSystem> expand_permutations(const Instance& inst) {
  // Choices per container: the list of concrete routes.
  std::vector<std::vector<Route>> per_container;
  for (const auto& spec : inst.visit_specs) {
    std::vector<Route> routes{{}};
    for (const auto& item : spec) {
      std::vector<Route> next;
      if (auto s = std::get_if<Symbol>(&item)) {
        for (auto r : routes) {
          r.push_back(*s);
          next.push_back(std::move(r));
        }
      } else {
        auto group = std::get<std::vector<Symbol>>(item);
        std::sort(group.begin(), group.end());
        for (const auto& r : routes) {
          auto perm = group;
          do {
            auto extended = r;
            extended.insert(extended.end(), perm.begin(), perm.end());
            next.push_back(std::move(extended));
          } while (std::next_permutation(perm.begin(), perm.end()));
        }
      }
      routes = std::move(next);
    }
    per_container.push_back(std::move(routes));
  }

  std::vector<RouteSystem> out;
  RouteSystem current(per_container.size());
  auto rec = [&](auto& self, std::size_t i) -> void {
    if (i == per_container.size()) {
      out.push_back(current);
      return;
    }
    for (const auto& r : per_container[i]) {
      current[i] = r;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

/// Container 1 reads its route once; the others read any rotation of theirs.
inline std::vector<Dfa> build_row_automata(const RouteSystem& rs) {
  std::vector<Dfa> out;
  for (std::size_t i = 0; i < rs.size(); ++i)
    out.push_back(i == 0 ? build_fixed_sequence_dfa(rs[i]) : build_cyclic_sequence_dfa(rs[i]));
  return out;
}

/// Maximal cyclic runs of customer stages, each delimited by production
/// stages, listed in cyclic order from their first stage and ordered by it.
inline std::vector<std::vector<std::size_t>> critical_subsequences(std::span<const Symbol> row) {
  const std::size_t n = row.size();
  auto first_prod = std::find(row.begin(), row.end(), kProduction);
  if (first_prod == row.end())
    throw std::invalid_argument("critical_subsequences: container never visits the production site");
  std::vector<std::vector<std::size_t>> runs;
  const auto p0 = static_cast<std::size_t>(first_prod - row.begin());
  // Walk one full cycle starting just after a production stage.
  std::vector<std::size_t> current;
  for (std::size_t step = 1; step <= n; ++step) {
    std::size_t k = (p0 + step) % n;
    if (row[k] == kProduction) {
      if (!current.empty()) runs.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(k);
    }
  }
  std::sort(runs.begin(), runs.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return runs;
}

/// All stage plans spelled by a word of global letters (one per choice of
/// tuple inside each letter's class).
inline std::vector<StagePlan> expand_plans(const TupleTable& table, std::span<const Symbol> word) {
  std::vector<std::vector<LetterTuple>> choices;
  for (Symbol g : word) {
    choices.push_back(table.members(g));
    if (choices.back().empty()) throw std::invalid_argument("expand_plans: unknown global letter");
  }
  std::vector<StagePlan> out;
  std::vector<LetterTuple> cols(word.size());
  auto rec = [&](auto& self, std::size_t k) -> void {
    if (k == word.size()) {
      StagePlan p;
      p.columns = cols;
      p.v.assign(table.arity, std::vector<Symbol>(word.size()));
      for (std::size_t i = 0; i < table.arity; ++i)
        for (std::size_t j = 0; j < word.size(); ++j) p.v[i][j] = cols[j][i];
      out.push_back(std::move(p));
      return;
    }
    for (const auto& t : choices[k]) {
      cols[k] = t;
      self(self, k + 1);
    }
  };
  rec(rec, 0);
  return out;
}

/// p_k >= R; one capacity row per (container, critical subsequence); maximise
/// the cycle length. A stage covered by no row is capped at the upper bound.
inline milp::MilpModel build_model(const StagePlan& plan, const Instance& inst) {
  const std::size_t n = plan.stages();
  auto model = milp::MilpModel::uniform(n, inst.reload_time);
  for (std::size_t i = 0; i < plan.v.size(); ++i) {
    for (const auto& run : critical_subsequences(plan.v[i])) {
      milp::Row row{std::vector<std::int64_t>(n, 0), inst.capacities[i]};
      for (std::size_t k : run) row.coefficients[k] += inst.demand(plan.v[i][k]);
      model.rows.push_back(std::move(row));
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    bool covered = false;
    for (const auto& r : model.rows) covered = covered || r.coefficients[k] > 0;
    if (!covered) model.upper_bounds[k] = std::max(inst.upper_bound, inst.reload_time);
  }
  return model;
}

// ---------------------------------------------------------------------------
// Solving

struct SolveReport {
  std::size_t route_systems = 0;
  std::size_t empty_products = 0;
  std::size_t minimal_solutions = 0;
  std::size_t models = 0;
};

inline Solution solve_instance(const Instance& inst, SolveReport* report = nullptr) {
  SolveReport local;
  SolveReport& rep = report ? *report : local;
  Solution best;
  const AllDifferentConstraint alldiff(inst.containers());
  for (const auto& rs : expand_permutations(inst)) {
    ++rep.route_systems;
    auto rows = build_row_automata(rs);
    auto reduced = reduce_product(synchronised_product(rows, alldiff));
    if (reduced.empty()) {
      ++rep.empty_products;
      continue;
    }
    for (const auto& word : enumerate_minimal_solutions(reduced.dfa)) {
      ++rep.minimal_solutions;
      for (const auto& plan : expand_plans(reduced.table, word)) {
        ++rep.models;
        auto res = milp::solve_milp(build_model(plan, inst));
        if (res.status != milp::Status::Optimal) continue;
        if (best.infeasible || res.objective > best.opt) {
          best.infeasible = false;
          best.opt = res.objective;
          best.durations = res.values;
          best.v = plan.v;
        }
      }
    }
  }
  return best;
}

inline bool validate_solution(const Instance& inst, const Solution& sol) {
  if (sol.infeasible) return false;
  const std::size_t m = inst.containers();
  const std::size_t n = sol.durations.size();
  if (n == 0 || sol.v.size() != m) return false;
  for (const auto& row : sol.v)
    if (row.size() != n) return false;

  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Symbol> col;
    for (std::size_t i = 0; i < m; ++i) col.push_back(sol.v[i][k]);
    std::sort(col.begin(), col.end());
    for (std::size_t i = 0; i < m; ++i)
      if (col[i] != static_cast<Symbol>(i + 1)) return false;
  }

  std::int64_t total = 0;
  for (auto p : sol.durations) {
    if (p < inst.reload_time) return false;
    total += p;
  }
  if (total != sol.opt || total > inst.upper_bound) return false;

  bool some_route_fits = false;
  for (const auto& rs : expand_permutations(inst)) {
    auto rows = build_row_automata(rs);
    bool all = true;
    for (std::size_t i = 0; all && i < m; ++i) all = accepts(rows[i], sol.v[i]);
    if (all) {
      some_route_fits = true;
      break;
    }
  }
  if (!some_route_fits) return false;

  for (std::size_t i = 0; i < m; ++i) {
    if (std::find(sol.v[i].begin(), sol.v[i].end(), kProduction) == sol.v[i].end()) return false;
    for (const auto& run : critical_subsequences(sol.v[i])) {
      std::int64_t load = 0;
      for (std::size_t k : run) load += inst.demand(sol.v[i][k]) * sol.durations[k];
      if (load > inst.capacities[i]) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Solution text and JSON

struct SolutionRecord {
  std::string id;
  std::int64_t time_ms = 0;
  Solution solution;
};

namespace detail {

template <class T>
void write_list(std::ostream& os, const std::vector<T>& xs) {
  os << '[';
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
  os << ']';
}

}  // namespace detail

/// `Instance = a4, Time = 11, Opt = 64, Pi = [..], V = [[..],..]`
inline std::string format_solution_line(const SolutionRecord& r) {
  std::ostringstream os;
  os << "Instance = " << r.id << ", Time = " << r.time_ms << ", Opt = " << r.solution.opt << ", Pi = ";
  detail::write_list(os, r.solution.durations);
  os << ", V = [";
  for (std::size_t i = 0; i < r.solution.v.size(); ++i) {
    if (i) os << ',';
    detail::write_list(os, r.solution.v[i]);
  }
  os << ']';
  return os.str();
}

/// Reads one or more solution lines (a record may span several lines).
inline std::vector<SolutionRecord> parse_solution_lines(const std::string& text) {
  detail::Lexer lx(text);
  std::vector<SolutionRecord> out;
  auto key = [&](const char* name) {
    std::size_t line = lx.peek().line;
    if (lx.ident("field name") != name) throw ParseError(line, std::string("expected field ") + name);
    lx.expect('=');
  };
  while (lx.peek().kind != detail::Token::Kind::End) {
    SolutionRecord r;
    key("Instance");
    r.id = lx.ident("instance id");
    lx.expect(',');
    key("Time");
    r.time_ms = lx.integer("time");
    lx.expect(',');
    key("Opt");
    r.solution.opt = lx.integer("opt");
    lx.expect(',');
    key("Pi");
    r.solution.durations = detail::int_list(lx, "duration");
    lx.expect(',');
    key("V");
    lx.expect('[');
    if (!lx.accept(']')) {
      do {
        std::vector<Symbol> row;
        for (auto x : detail::int_list(lx, "location")) row.push_back(static_cast<Symbol>(x));
        r.solution.v.push_back(std::move(row));
      } while (lx.accept(','));
      lx.expect(']');
    }
    r.solution.infeasible = r.solution.durations.empty();
    out.push_back(std::move(r));
  }
  return out;
}

inline nlohmann::json to_json(const SolutionRecord& r) {
  return {{"instance", r.id},
          {"time_ms", r.time_ms},
          {"opt", r.solution.opt},
          {"pi", r.solution.durations},
          {"v", r.solution.v}};
}

inline SolutionRecord record_from_json(const nlohmann::json& j) {
  SolutionRecord r;
  r.id = j.at("instance").get<std::string>();
  r.time_ms = j.at("time_ms").get<std::int64_t>();
  r.solution.opt = j.at("opt").get<std::int64_t>();
  r.solution.durations = j.at("pi").get<std::vector<std::int64_t>>();
  r.solution.v = j.at("v").get<LocationMatrix>();
  r.solution.infeasible = r.solution.durations.empty();
  return r;
}

}  // namespace synprod::hdp
