#pragma once

// Synchronised product of DFAs restricted by a column constraint, its
// reduction to a global-letter automaton plus tuple table, and size
// statistics over collections of products.

#include <synprod/automata.hpp>

#include <cmath>
#include <functional>
#include <map>
#include <memory>
#include <ostream>
#include <set>
#include <stdexcept>
#include <vector>

namespace synprod {

using LetterTuple = std::vector<Symbol>;

/// A constraint over the m letters read in one column.
class ColumnConstraint {
 public:
  virtual ~ColumnConstraint() = default;

  virtual std::size_t arity() const = 0;
  virtual bool holds(std::span<const Symbol> tuple) const = 0;

  /// Every satisfying tuple with entry i drawn from candidates[i], in
  /// lexicographic order. The default backtracks and checks leaves; subclasses
  /// override with pruning.
  virtual std::vector<LetterTuple> generate(std::span<const std::vector<Symbol>> candidates) const {
    std::vector<LetterTuple> out;
    LetterTuple t(candidates.size());
    auto rec = [&](auto& self, std::size_t i) -> void {
      if (i == candidates.size()) {
        if (holds(t)) out.push_back(t);
        return;
      }
      for (Symbol s : candidates[i]) {
        t[i] = s;
        self(self, i + 1);
      }
    };
    rec(rec, 0);
    return out;
  }
};

class AllDifferentConstraint final : public ColumnConstraint {
 public:
  explicit AllDifferentConstraint(std::size_t m) : m_(m) {}

  std::size_t arity() const override { return m_; }

  bool holds(std::span<const Symbol> tuple) const override {
    std::set<Symbol> seen(tuple.begin(), tuple.end());
    return seen.size() == tuple.size();
  }

  std::vector<LetterTuple> generate(std::span<const std::vector<Symbol>> candidates) const override {
    std::vector<LetterTuple> out;
    LetterTuple t(candidates.size());
    std::set<Symbol> used;
    auto rec = [&](auto& self, std::size_t i) -> void {
      if (i == candidates.size()) {
        out.push_back(t);
        return;
      }
      for (Symbol s : candidates[i]) {
        if (!used.insert(s).second) continue;
        t[i] = s;
        self(self, i + 1);
        used.erase(s);
      }
    };
    rec(rec, 0);
    return out;
  }

 private:
  std::size_t m_;
};

class TrueConstraint final : public ColumnConstraint {
 public:
  explicit TrueConstraint(std::size_t m) : m_(m) {}
  std::size_t arity() const override { return m_; }
  bool holds(std::span<const Symbol>) const override { return true; }

 private:
  std::size_t m_;
};

/// Arbitrary predicate; tuples are generated by plain enumeration.
class PredicateConstraint final : public ColumnConstraint {
 public:
  PredicateConstraint(std::size_t m, std::function<bool(std::span<const Symbol>)> pred)
      : m_(m), pred_(std::move(pred)) {}
  std::size_t arity() const override { return m_; }
  bool holds(std::span<const Symbol> tuple) const override { return pred_(tuple); }

 private:
  std::size_t m_;
  std::function<bool(std::span<const Symbol>)> pred_;
};

inline std::vector<LetterTuple> feasible_tuples(const ColumnConstraint& c,
                                                std::span<const std::vector<Symbol>> candidates) {
  if (candidates.size() != c.arity()) throw std::invalid_argument("feasible_tuples: arity mismatch");
  std::vector<std::vector<Symbol>> sorted;
  sorted.reserve(candidates.size());
  for (const auto& s : candidates) sorted.push_back(detail::sorted_unique(s));
  auto out = c.generate(sorted);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Product over tuple letters. dfa symbols are indices into `tuples`, which
/// is sorted, so symbol order is lexicographic tuple order.
struct ProductAutomaton {
  Dfa dfa;
  std::vector<LetterTuple> tuples;
  std::vector<std::vector<State>> state_meaning;  // product state -> local states
  std::vector<std::vector<Symbol>> row_alphabets;

  std::size_t arity() const { return row_alphabets.size(); }
  const LetterTuple& tuple(Symbol s) const { return tuples.at(static_cast<std::size_t>(s)); }
};

inline ProductAutomaton synchronised_product(std::span<const Dfa> automata, const ColumnConstraint& c) {
  const std::size_t m = automata.size();
  if (m == 0) throw std::invalid_argument("synchronised_product: no automata");
  if (c.arity() != m) throw std::invalid_argument("synchronised_product: constraint arity mismatch");

  ProductAutomaton p;
  for (const auto& a : automata) p.row_alphabets.emplace_back(a.alphabet().begin(), a.alphabet().end());
  for (const auto& a : automata)
    if (a.state_count() == 0) {
      p.dfa = Dfa({}, 0);
      return p;
    }

  struct Edge {
    State from;
    LetterTuple tuple;
    State to;
  };
  std::map<std::vector<State>, State> ids;
  std::vector<std::vector<State>> meaning;
  std::vector<Edge> edges;

  std::vector<State> start;
  for (const auto& a : automata) start.push_back(a.initial());
  ids.emplace(start, 0);
  meaning.push_back(start);

  std::vector<std::vector<Symbol>> candidates(m);
  for (std::size_t i = 0; i < meaning.size(); ++i) {
    const auto local = meaning[i];
    for (std::size_t r = 0; r < m; ++r) {
      candidates[r].clear();
      for (std::size_t a = 0; a < automata[r].letter_count(); ++a)
        if (automata[r].next(local[r], a) != kNoState) candidates[r].push_back(automata[r].symbol(a));
    }
    for (auto& t : c.generate(candidates)) {
      std::vector<State> target(m);
      for (std::size_t r = 0; r < m; ++r) target[r] = automata[r].next(local[r], *automata[r].letter_of(t[r]));
      auto [it, inserted] = ids.emplace(target, static_cast<State>(meaning.size()));
      if (inserted) meaning.push_back(std::move(target));
      edges.push_back({static_cast<State>(i), std::move(t), it->second});
    }
  }

  std::vector<LetterTuple> tuples;
  for (const auto& e : edges) tuples.push_back(e.tuple);
  std::sort(tuples.begin(), tuples.end());
  tuples.erase(std::unique(tuples.begin(), tuples.end()), tuples.end());
  std::vector<Symbol> sigma(tuples.size());
  std::iota(sigma.begin(), sigma.end(), 0);

  Dfa raw(sigma, meaning.size(), 0);
  for (State q = 0; q < meaning.size(); ++q) {
    bool all_final = true;
    for (std::size_t r = 0; r < m; ++r) all_final = all_final && automata[r].is_final(meaning[q][r]);
    raw.set_final(q, all_final);
  }
  for (const auto& e : edges) {
    auto idx = std::lower_bound(tuples.begin(), tuples.end(), e.tuple) - tuples.begin();
    raw.set_transition(e.from, static_cast<std::size_t>(idx), e.to);
  }

  auto fwd = detail::reachable(raw);
  auto bwd = detail::coreachable(raw);
  std::vector<bool> keep(raw.state_count());
  for (std::size_t q = 0; q < keep.size(); ++q) keep[q] = fwd[q] && bwd[q];
  auto [trimmed, remap] = detail::restrict_states(raw, keep);
  for (State q = 0; q < meaning.size(); ++q)
    if (remap[q] != kNoState) {
      if (p.state_meaning.size() <= remap[q]) p.state_meaning.resize(remap[q] + 1);
      p.state_meaning[remap[q]] = meaning[q];
    }

  // Re-intern so that the alphabet only holds tuples that survive trimming.
  Dfa compact = drop_unused_letters(trimmed);
  std::vector<Symbol> new_sigma(compact.letter_count());
  std::iota(new_sigma.begin(), new_sigma.end(), 0);
  Dfa renamed(new_sigma, compact.state_count(), compact.state_count() ? compact.initial() : 0);
  for (State q = 0; q < compact.state_count(); ++q) {
    renamed.set_final(q, compact.is_final(q));
    for (std::size_t a = 0; a < compact.letter_count(); ++a)
      if (State t = compact.next(q, a); t != kNoState) renamed.set_transition(q, a, t);
  }
  for (std::size_t a = 0; a < compact.letter_count(); ++a)
    p.tuples.push_back(tuples[static_cast<std::size_t>(compact.symbol(a))]);
  p.dfa = std::move(renamed);
  return p;
}

// ---------------------------------------------------------------------------
// Reduction to global letters

struct TupleTable {
  struct Row {
    LetterTuple tuple;
    Symbol global;
    friend bool operator==(const Row&, const Row&) = default;
  };
  std::size_t arity = 0;
  std::vector<Row> rows;  // sorted by tuple

  std::size_t size() const { return rows.size(); }

  std::size_t global_letter_count() const {
    std::set<Symbol> g;
    for (const auto& r : rows) g.insert(r.global);
    return g.size();
  }

  std::vector<LetterTuple> members(Symbol global) const {
    std::vector<LetterTuple> out;
    for (const auto& r : rows)
      if (r.global == global) out.push_back(r.tuple);
    return out;
  }
};

struct ReducedProduct {
  Dfa dfa;  // over global letters 1..p'
  TupleTable table;
  std::vector<std::vector<Symbol>> row_alphabets;

  bool empty() const { return dfa.state_count() == 0; }
};

/// Minimize the tuple-letter automaton, merge equivalent letters and number
/// the classes 1..p' by their lexicographically smallest tuple.
inline ReducedProduct reduce_product(const ProductAutomaton& p) {
  ReducedProduct out;
  out.row_alphabets = p.row_alphabets;
  out.table.arity = p.arity();
  Dfa minimal = drop_unused_letters(minimize(p.dfa));
  if (minimal.state_count() == 0) {
    out.dfa = Dfa({}, 0);
    return out;
  }
  // Letter indices follow tuple order, and classes are ordered by their first
  // (smallest) member, which gives the numbering directly.
  LetterPartition classes = equivalent_letter_classes(minimal);
  std::vector<Symbol> globals(classes.classes.size());
  std::iota(globals.begin(), globals.end(), 1);
  Dfa g(globals, minimal.state_count(), minimal.initial());
  for (State q = 0; q < minimal.state_count(); ++q) {
    g.set_final(q, minimal.is_final(q));
    for (std::size_t c = 0; c < classes.classes.size(); ++c)
      if (State t = minimal.next(q, classes.representative(c)); t != kNoState) g.set_transition(q, c, t);
  }
  for (std::size_t c = 0; c < classes.classes.size(); ++c)
    for (auto a : classes.classes[c])
      out.table.rows.push_back({p.tuple(minimal.symbol(a)), globals[c]});
  std::sort(out.table.rows.begin(), out.table.rows.end(),
            [](const auto& x, const auto& y) { return x.tuple < y.tuple; });
  out.dfa = std::move(g);
  return out;
}

inline void write_table_csv(std::ostream& os, const TupleTable& t) {
  for (std::size_t i = 0; i < t.arity; ++i) os << "l_" << (i + 1) << ',';
  os << "l_g\n";
  for (const auto& r : t.rows) {
    for (Symbol s : r.tuple) os << s << ',';
    os << r.global << '\n';
  }
}

// ---------------------------------------------------------------------------
// Statistics

struct ProductStats {
  double in_states_product = 0;
  std::size_t out_states = 0;
  std::size_t out_alphabet = 0;
  bool infeasible = true;
};

inline ProductStats collect_stats(std::span<const Dfa> inputs, const Dfa& reduced, const TupleTable& table) {
  ProductStats s;
  s.in_states_product = 1;
  for (const auto& d : inputs) s.in_states_product *= static_cast<double>(d.state_count());
  s.out_states = reduced.state_count();
  s.out_alphabet = table.global_letter_count();
  s.infeasible = s.out_states == 0;
  return s;
}

struct FieldSummary {
  double min = 0, max = 0, mean = 0;
  double stddev = 0;             // n - 1 denominator
  double population_stddev = 0;  // n denominator, as in the published statistics
};

struct StatsSummary {
  std::size_t count = 0;
  std::size_t infeasible = 0;
  FieldSummary in_states, out_states, out_alphabet;
};

inline FieldSummary summarize(std::span<const double> xs) {
  FieldSummary f;
  f.min = *std::min_element(xs.begin(), xs.end());
  f.max = *std::max_element(xs.begin(), xs.end());
  double sum = 0;
  for (double x : xs) sum += x;
  f.mean = sum / static_cast<double>(xs.size());
  double sq = 0;
  for (double x : xs) sq += (x - f.mean) * (x - f.mean);
  f.population_stddev = std::sqrt(sq / static_cast<double>(xs.size()));
  if (xs.size() > 1) f.stddev = std::sqrt(sq / static_cast<double>(xs.size() - 1));
  return f;
}

/// Min, max, mean and both standard deviations per field.
inline StatsSummary aggregate(std::span<const ProductStats> stats) {
  if (stats.empty()) throw std::invalid_argument("aggregate: no data");
  StatsSummary s;
  s.count = stats.size();
  std::vector<double> in, out, alpha;
  for (const auto& p : stats) {
    in.push_back(p.in_states_product);
    out.push_back(static_cast<double>(p.out_states));
    alpha.push_back(static_cast<double>(p.out_alphabet));
    if (p.infeasible) ++s.infeasible;
  }
  s.in_states = summarize(in);
  s.out_states = summarize(out);
  s.out_alphabet = summarize(alpha);
  return s;
}

}  // namespace synprod
