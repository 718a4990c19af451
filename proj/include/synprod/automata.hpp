#pragma once

// Deterministic finite automata over small integer alphabets.
//
// A Dfa is partial: undefined transitions go to an implicit dead state that is
// never stored. Letters are dense indices into a sorted alphabet of external
// symbols (locations, tuple ids, global letters), so index order and symbol
// order agree.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace synprod {

using Symbol = int;
using State = std::uint32_t;
using Word = std::vector<Symbol>;

inline constexpr State kNoState = std::numeric_limits<State>::max();

class Dfa {
 public:
  /// The empty automaton: no states, accepts nothing.
  Dfa() = default;

  Dfa(std::vector<Symbol> alphabet, std::size_t states, State initial = 0)
      : alphabet_(std::move(alphabet)),
        states_(states),
        initial_(states == 0 ? kNoState : initial),
        delta_(states * alphabet_.size(), kNoState),
        final_(states, false) {
    if (!std::is_sorted(alphabet_.begin(), alphabet_.end()) ||
        std::adjacent_find(alphabet_.begin(), alphabet_.end()) != alphabet_.end()) {
      throw std::invalid_argument("Dfa: alphabet must be sorted and unique");
    }
    if (states != 0 && initial >= states) {
      throw std::invalid_argument("Dfa: initial state out of range");
    }
  }

  std::size_t state_count() const { return states_; }
  std::size_t letter_count() const { return alphabet_.size(); }
  std::span<const Symbol> alphabet() const { return alphabet_; }
  Symbol symbol(std::size_t letter) const { return alphabet_[letter]; }
  State initial() const { return initial_; }

  std::optional<std::size_t> letter_of(Symbol s) const {
    auto it = std::lower_bound(alphabet_.begin(), alphabet_.end(), s);
    if (it == alphabet_.end() || *it != s) return std::nullopt;
    return static_cast<std::size_t>(it - alphabet_.begin());
  }

  State next(State q, std::size_t letter) const { return delta_[q * alphabet_.size() + letter]; }

  void set_transition(State from, std::size_t letter, State to) {
    if (from >= states_ || to >= states_ || letter >= alphabet_.size()) {
      throw std::out_of_range("Dfa::set_transition");
    }
    delta_[from * alphabet_.size() + letter] = to;
  }

  bool is_final(State q) const { return final_[q]; }
  void set_final(State q, bool f = true) { final_.at(q) = f; }

  std::size_t final_count() const {
    return static_cast<std::size_t>(std::count(final_.begin(), final_.end(), true));
  }

  std::size_t transition_count() const {
    return static_cast<std::size_t>(
        std::count_if(delta_.begin(), delta_.end(), [](State t) { return t != kNoState; }));
  }

  friend bool operator==(const Dfa&, const Dfa&) = default;

 private:
  std::vector<Symbol> alphabet_;
  std::size_t states_ = 0;
  State initial_ = kNoState;
  std::vector<State> delta_;
  std::vector<bool> final_;
};

/// Nondeterministic automaton used as an intermediate for unions.
struct Nfa {
  std::vector<Symbol> alphabet;  // sorted, unique
  std::size_t states = 0;
  std::vector<State> initials;
  std::vector<bool> finals;
  // transitions[q][letter] = successor set
  std::vector<std::vector<std::vector<State>>> transitions;

  Nfa() = default;
  Nfa(std::vector<Symbol> sigma, std::size_t n)
      : alphabet(std::move(sigma)),
        states(n),
        finals(n, false),
        transitions(n, std::vector<std::vector<State>>(alphabet.size())) {}

  std::size_t letter_of(Symbol s) const {
    auto it = std::lower_bound(alphabet.begin(), alphabet.end(), s);
    if (it == alphabet.end() || *it != s) throw std::invalid_argument("Nfa: unknown symbol");
    return static_cast<std::size_t>(it - alphabet.begin());
  }

  State add_state(bool final = false) {
    transitions.emplace_back(alphabet.size());
    finals.push_back(final);
    return static_cast<State>(states++);
  }

  void add_transition(State from, Symbol s, State to) {
    auto& targets = transitions.at(from)[letter_of(s)];
    if (std::find(targets.begin(), targets.end(), to) == targets.end()) targets.push_back(to);
  }
};

struct LetterPartition {
  // Each class lists letter indices in increasing order; the first is the
  // representative. Classes are ordered by representative.
  std::vector<std::vector<std::size_t>> classes;

  std::size_t representative(std::size_t cls) const { return classes[cls].front(); }
};

// ---------------------------------------------------------------------------
// Basic queries

inline bool accepts(const Dfa& d, std::span<const Symbol> word) {
  if (d.state_count() == 0) return false;
  State q = d.initial();
  for (Symbol s : word) {
    auto letter = d.letter_of(s);
    if (!letter) return false;
    q = d.next(q, *letter);
    if (q == kNoState) return false;
  }
  return d.is_final(q);
}

namespace detail {

inline std::vector<bool> reachable(const Dfa& d) {
  std::vector<bool> seen(d.state_count(), false);
  if (d.state_count() == 0) return seen;
  std::vector<State> stack{d.initial()};
  seen[d.initial()] = true;
  while (!stack.empty()) {
    State q = stack.back();
    stack.pop_back();
    for (std::size_t a = 0; a < d.letter_count(); ++a) {
      State t = d.next(q, a);
      if (t != kNoState && !seen[t]) {
        seen[t] = true;
        stack.push_back(t);
      }
    }
  }
  return seen;
}

inline std::vector<bool> coreachable(const Dfa& d) {
  const std::size_t n = d.state_count();
  std::vector<std::vector<State>> preds(n);
  for (State q = 0; q < n; ++q)
    for (std::size_t a = 0; a < d.letter_count(); ++a)
      if (State t = d.next(q, a); t != kNoState) preds[t].push_back(q);
  std::vector<bool> seen(n, false);
  std::vector<State> stack;
  for (State q = 0; q < n; ++q)
    if (d.is_final(q)) {
      seen[q] = true;
      stack.push_back(q);
    }
  while (!stack.empty()) {
    State q = stack.back();
    stack.pop_back();
    for (State p : preds[q])
      if (!seen[p]) {
        seen[p] = true;
        stack.push_back(p);
      }
  }
  return seen;
}

/// Copy of `d` restricted to the states with keep[q]; returns the old->new map.
inline std::pair<Dfa, std::vector<State>> restrict_states(const Dfa& d, const std::vector<bool>& keep) {
  std::vector<State> remap(d.state_count(), kNoState);
  State next_id = 0;
  for (State q = 0; q < d.state_count(); ++q)
    if (keep[q]) remap[q] = next_id++;
  if (next_id == 0 || remap[d.initial()] == kNoState) {
    return {Dfa({d.alphabet().begin(), d.alphabet().end()}, 0), std::vector<State>(d.state_count(), kNoState)};
  }
  Dfa out({d.alphabet().begin(), d.alphabet().end()}, next_id, remap[d.initial()]);
  for (State q = 0; q < d.state_count(); ++q) {
    if (remap[q] == kNoState) continue;
    out.set_final(remap[q], d.is_final(q));
    for (std::size_t a = 0; a < d.letter_count(); ++a) {
      State t = d.next(q, a);
      if (t != kNoState && remap[t] != kNoState) out.set_transition(remap[q], a, remap[t]);
    }
  }
  return {std::move(out), std::move(remap)};
}

/// Renumber states in breadth-first order from the initial state, exploring
/// letters in increasing order. Two isomorphic trimmed DFAs over the same
/// alphabet become equal after this.
inline Dfa canonical_numbering(const Dfa& d) {
  if (d.state_count() == 0) return d;
  std::vector<State> order;
  std::vector<State> remap(d.state_count(), kNoState);
  remap[d.initial()] = 0;
  order.push_back(d.initial());
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t a = 0; a < d.letter_count(); ++a) {
      State t = d.next(order[i], a);
      if (t != kNoState && remap[t] == kNoState) {
        remap[t] = static_cast<State>(order.size());
        order.push_back(t);
      }
    }
  }
  Dfa out({d.alphabet().begin(), d.alphabet().end()}, order.size(), 0);
  for (State q : order) {
    out.set_final(remap[q], d.is_final(q));
    for (std::size_t a = 0; a < d.letter_count(); ++a)
      if (State t = d.next(q, a); t != kNoState) out.set_transition(remap[q], a, remap[t]);
  }
  return out;
}

inline void check_block_sequence(std::span<const Symbol> seq, bool cyclic) {
  if (seq.empty()) throw std::invalid_argument("visit sequence is empty");
  for (std::size_t i = 0; i + 1 < seq.size(); ++i)
    if (seq[i] == seq[i + 1])
      throw std::invalid_argument("visit sequence repeats location " + std::to_string(seq[i]) +
                                  " at adjacent positions");
  if (cyclic && seq.size() > 1 && seq.front() == seq.back())
    throw std::invalid_argument("cyclic visit sequence starts and ends at location " +
                                std::to_string(seq.front()));
}

inline std::vector<Symbol> sorted_unique(std::span<const Symbol> s) {
  std::vector<Symbol> out(s.begin(), s.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace detail

/// Keep exactly the states that are both reachable and co-reachable.
inline Dfa trim(const Dfa& d) {
  if (d.state_count() == 0) return d;
  auto fwd = detail::reachable(d);
  auto bwd = detail::coreachable(d);
  std::vector<bool> keep(d.state_count());
  for (std::size_t q = 0; q < keep.size(); ++q) keep[q] = fwd[q] && bwd[q];
  return detail::restrict_states(d, keep).first;
}

inline bool is_empty(const Dfa& d) { return trim(d).state_count() == 0; }

/// Drop alphabet letters that label no transition.
inline Dfa drop_unused_letters(const Dfa& d) {
  std::vector<std::size_t> used;
  for (std::size_t a = 0; a < d.letter_count(); ++a) {
    for (State q = 0; q < d.state_count(); ++q)
      if (d.next(q, a) != kNoState) {
        used.push_back(a);
        break;
      }
  }
  std::vector<Symbol> sigma;
  for (auto a : used) sigma.push_back(d.symbol(a));
  Dfa out(sigma, d.state_count(), d.initial());
  for (State q = 0; q < d.state_count(); ++q) {
    out.set_final(q, d.is_final(q));
    for (std::size_t i = 0; i < used.size(); ++i)
      if (State t = d.next(q, used[i]); t != kNoState) out.set_transition(q, i, t);
  }
  return out;
}

/// Minimal partial DFA by Moore partition refinement. The result is trimmed
/// and its states are numbered canonically (BFS from the initial state), so
/// minimal automata of the same language compare equal.
inline Dfa minimize(const Dfa& input) {
  Dfa d = trim(input);
  const std::size_t n = d.state_count();
  if (n == 0) return d;
  const std::size_t k = d.letter_count();

  std::vector<std::size_t> block(n);
  for (State q = 0; q < n; ++q) block[q] = d.is_final(q) ? 1 : 0;
  std::size_t block_count = 0;
  for (;;) {
    // Signature: own block, then the block of each successor (or "none").
    std::map<std::vector<std::size_t>, std::size_t> ids;
    std::vector<std::size_t> next_block(n);
    constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
    for (State q = 0; q < n; ++q) {
      std::vector<std::size_t> sig;
      sig.reserve(k + 1);
      sig.push_back(block[q]);
      for (std::size_t a = 0; a < k; ++a) {
        State t = d.next(q, a);
        sig.push_back(t == kNoState ? kNone : block[t]);
      }
      auto [it, inserted] = ids.emplace(std::move(sig), ids.size());
      next_block[q] = it->second;
    }
    block.swap(next_block);
    if (ids.size() == block_count) break;
    block_count = ids.size();
  }

  Dfa q({d.alphabet().begin(), d.alphabet().end()}, block_count, static_cast<State>(block[d.initial()]));
  for (State s = 0; s < n; ++s) {
    auto b = static_cast<State>(block[s]);
    q.set_final(b, d.is_final(s));
    for (std::size_t a = 0; a < k; ++a)
      if (State t = d.next(s, a); t != kNoState) q.set_transition(b, a, static_cast<State>(block[t]));
  }
  return detail::canonical_numbering(q);
}

/// Subset construction. The result is trimmed.
inline Dfa determinize(const Nfa& n) {
  std::vector<State> start(n.initials.begin(), n.initials.end());
  std::sort(start.begin(), start.end());
  start.erase(std::unique(start.begin(), start.end()), start.end());
  if (start.empty()) return Dfa(n.alphabet, 0);

  std::map<std::vector<State>, State> ids;
  std::vector<std::vector<State>> subsets;
  struct Edge {
    State from;
    std::size_t letter;
    State to;
  };
  std::vector<Edge> edges;
  ids.emplace(start, 0);
  subsets.push_back(start);
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    for (std::size_t a = 0; a < n.alphabet.size(); ++a) {
      std::vector<State> target;
      for (State q : subsets[i])
        for (State t : n.transitions[q][a]) target.push_back(t);
      if (target.empty()) continue;
      std::sort(target.begin(), target.end());
      target.erase(std::unique(target.begin(), target.end()), target.end());
      auto [it, inserted] = ids.emplace(target, static_cast<State>(subsets.size()));
      if (inserted) subsets.push_back(target);
      edges.push_back({static_cast<State>(i), a, it->second});
    }
  }
  Dfa d(n.alphabet, subsets.size(), 0);
  for (std::size_t i = 0; i < subsets.size(); ++i)
    d.set_final(static_cast<State>(i), std::any_of(subsets[i].begin(), subsets[i].end(),
                                                   [&](State q) { return n.finals[q]; }));
  for (const auto& e : edges) d.set_transition(e.from, e.letter, e.to);
  return trim(d);
}

/// View a DFA as an NFA (used to cross-check determinize).
inline Nfa as_nfa(const Dfa& d) {
  Nfa n({d.alphabet().begin(), d.alphabet().end()}, d.state_count());
  if (d.state_count() == 0) return n;
  n.initials = {d.initial()};
  for (State q = 0; q < d.state_count(); ++q) {
    n.finals[q] = d.is_final(q);
    for (std::size_t a = 0; a < d.letter_count(); ++a)
      if (State t = d.next(q, a); t != kNoState) n.transitions[q][a].push_back(t);
  }
  return n;
}

// ---------------------------------------------------------------------------
// Visit-sequence builders

/// s1^+ s2^+ ... sk^+
inline Dfa build_fixed_sequence_dfa(std::span<const Symbol> seq) {
  detail::check_block_sequence(seq, false);
  Dfa d(detail::sorted_unique(seq), seq.size() + 1, 0);
  for (std::size_t j = 0; j < seq.size(); ++j) {
    auto letter = *d.letter_of(seq[j]);
    d.set_transition(static_cast<State>(j), letter, static_cast<State>(j + 1));
    d.set_transition(static_cast<State>(j + 1), letter, static_cast<State>(j + 1));
  }
  d.set_final(static_cast<State>(seq.size()));
  return minimize(d);
}

/// Union over the k rotations of the cycle. The rotation anchored at s_i reads
/// s_i^* s_{i+1}^+ ... s_{i+k-1}^+ s_i^+ (indices mod k), so every block of the
/// cycle is visited once and the word may start part-way through block s_i.
inline Dfa build_cyclic_sequence_dfa(std::span<const Symbol> seq) {
  detail::check_block_sequence(seq, true);
  const std::size_t k = seq.size();
  if (k == 1) return build_fixed_sequence_dfa(seq);

  Nfa n(detail::sorted_unique(seq), 0);
  for (std::size_t i = 0; i < k; ++i) {
    State head = n.add_state();
    n.initials.push_back(head);
    n.add_transition(head, seq[i], head);
    State prev = head;
    for (std::size_t step = 1; step <= k; ++step) {
      Symbol s = seq[(i + step) % k];
      State q = n.add_state(step == k);
      n.add_transition(prev, s, q);
      n.add_transition(q, s, q);
      prev = q;
    }
  }
  return minimize(determinize(n));
}

// ---------------------------------------------------------------------------
// Alphabet reduction

/// Letters a, b are equivalent iff delta(q, a) == delta(q, b) for every q
/// (both undefined counts as equal).
inline LetterPartition equivalent_letter_classes(const Dfa& d) {
  std::map<std::vector<State>, std::size_t> column_ids;
  LetterPartition p;
  for (std::size_t a = 0; a < d.letter_count(); ++a) {
    std::vector<State> column(d.state_count());
    for (State q = 0; q < d.state_count(); ++q) column[q] = d.next(q, a);
    auto [it, inserted] = column_ids.emplace(std::move(column), p.classes.size());
    if (inserted) p.classes.emplace_back();
    p.classes[it->second].push_back(a);
  }
  return p;
}

struct QuotientAlphabet {
  Dfa dfa;  // reads one representative symbol per class
  std::map<Symbol, std::vector<Symbol>> members;  // representative -> class members
};

inline QuotientAlphabet quotient_alphabet(const Dfa& d, const LetterPartition& p) {
  std::vector<Symbol> reps;
  for (std::size_t c = 0; c < p.classes.size(); ++c) reps.push_back(d.symbol(p.representative(c)));
  QuotientAlphabet out{Dfa(reps, d.state_count(), d.initial()), {}};
  for (std::size_t c = 0; c < p.classes.size(); ++c) {
    auto& m = out.members[reps[c]];
    for (auto a : p.classes[c]) m.push_back(d.symbol(a));
  }
  for (State q = 0; q < d.state_count(); ++q) {
    out.dfa.set_final(q, d.is_final(q));
    for (std::size_t c = 0; c < p.classes.size(); ++c)
      if (State t = d.next(q, p.representative(c)); t != kNoState) out.dfa.set_transition(q, c, t);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Cycle shape and minimal solutions

/// True iff every cycle of the transition graph is a self-loop.
inline bool has_only_self_loop_cycles(const Dfa& d) {
  const std::size_t n = d.state_count();
  std::vector<std::size_t> indegree(n, 0);
  for (State q = 0; q < n; ++q)
    for (std::size_t a = 0; a < d.letter_count(); ++a)
      if (State t = d.next(q, a); t != kNoState && t != q) ++indegree[t];
  std::vector<State> ready;
  for (State q = 0; q < n; ++q)
    if (indegree[q] == 0) ready.push_back(q);
  std::size_t removed = 0;
  while (!ready.empty()) {
    State q = ready.back();
    ready.pop_back();
    ++removed;
    for (std::size_t a = 0; a < d.letter_count(); ++a)
      if (State t = d.next(q, a); t != kNoState && t != q && --indegree[t] == 0) ready.push_back(t);
  }
  return removed == n;
}

/// Words along initial->final paths that never take a self-loop, in
/// lexicographic order of letters. Requires a self-loop-only cycle structure.
inline std::vector<Word> enumerate_minimal_solutions(const Dfa& input) {
  Dfa d = trim(input);
  if (d.state_count() == 0) return {};
  if (!has_only_self_loop_cycles(d))
    throw std::logic_error("enumerate_minimal_solutions: automaton has a cycle through several states");

  std::vector<Word> out;
  Word word;
  auto visit = [&](auto& self, State q) -> void {
    if (d.is_final(q)) out.push_back(word);
    for (std::size_t a = 0; a < d.letter_count(); ++a) {
      State t = d.next(q, a);
      if (t == kNoState || t == q) continue;
      word.push_back(d.symbol(a));
      self(self, t);
      word.pop_back();
    }
  };
  visit(visit, d.initial());
  return out;
}

// ---------------------------------------------------------------------------
// DOT

inline void write_dot(std::ostream& os, const Dfa& d, const std::string& name = "dfa") {
  os << "digraph " << name << " {\n  rankdir=LR;\n";
  if (d.state_count() > 0) {
    os << "  init [shape=point];\n";
    for (State q = 0; q < d.state_count(); ++q)
      os << "  q" << q << " [shape=" << (d.is_final(q) ? "doublecircle" : "circle") << "];\n";
    os << "  init -> q" << d.initial() << ";\n";
    for (State q = 0; q < d.state_count(); ++q)
      for (std::size_t a = 0; a < d.letter_count(); ++a)
        if (State t = d.next(q, a); t != kNoState)
          os << "  q" << q << " -> q" << t << " [label=\"" << d.symbol(a) << "\"];\n";
  }
  os << "}\n";
}

}  // namespace synprod
