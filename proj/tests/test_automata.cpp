#include <synprod/automata.hpp>
#include <synprod/gac_check.hpp>

#include "support/oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <sstream>

using namespace synprod;

namespace {

std::vector<Symbol> sigma_of(const Dfa& d) { return {d.alphabet().begin(), d.alphabet().end()}; }

/// Accepted suffixes of length <= len from state q.
std::set<Word> residual(const Dfa& d, State q, std::size_t len) {
  std::set<Word> out;
  for (const auto& w : oracle::all_words(sigma_of(d), len)) {
    State s = q;
    for (Symbol x : w) {
      if (s == kNoState) break;
      s = d.next(s, *d.letter_of(x));
    }
    if (s != kNoState && d.is_final(s)) out.insert(w);
  }
  return out;
}

}  // namespace

TEST_CASE("fixed sequence accepts exactly the block pattern", "[automata]") {
  const std::vector<Symbol> seq{2, 1, 3, 1, 4, 1};
  auto d = build_fixed_sequence_dfa(seq);
  CHECK(d.state_count() == 7);
  for (const auto& w : oracle::all_words({1, 2, 3, 4}, 7)) CHECK(accepts(d, w) == oracle::matches_fixed(seq, w));
}

TEST_CASE("cyclic sequence accepts exactly the rotation pattern", "[automata]") {
  for (const std::vector<Symbol>& seq :
       {std::vector<Symbol>{3, 4, 1}, {4, 1, 2, 3, 1}, {2, 4, 1}, {2, 1}, {1, 2, 1, 3}}) {
    auto d = build_cyclic_sequence_dfa(seq);
    auto sigma = detail::sorted_unique(seq);
    for (const auto& w : oracle::all_words(sigma, 7)) {
      INFO("word length " << w.size());
      CHECK(accepts(d, w) == oracle::matches_cyclic(seq, w));
    }
  }
}

TEST_CASE("row automata sizes for the four-container routes", "[automata]") {
  CHECK(build_fixed_sequence_dfa(std::vector<Symbol>{2, 1, 3, 1, 4, 1}).state_count() == 7);
  CHECK(build_cyclic_sequence_dfa(std::vector<Symbol>{4, 1, 2, 3, 1}).state_count() == 29);
  CHECK(build_cyclic_sequence_dfa(std::vector<Symbol>{2, 4, 1}).state_count() == 13);
  CHECK(build_cyclic_sequence_dfa(std::vector<Symbol>{3, 4, 1}).state_count() == 13);
}

TEST_CASE("cyclic sequence examples", "[automata]") {
  auto d = build_cyclic_sequence_dfa(std::vector<Symbol>{3, 4, 1});
  CHECK(accepts(d, Word{4, 1, 3, 4}));
  CHECK(accepts(d, Word{1, 3, 4, 1}));
  CHECK(accepts(d, Word{3, 3, 4, 1, 1}));
  CHECK_FALSE(accepts(d, Word{3, 4}));
  CHECK_FALSE(accepts(d, Word{3, 1, 4}));
  CHECK_FALSE(accepts(d, Word{}));
  CHECK(has_only_self_loop_cycles(d));
}

TEST_CASE("union of rotation branches equals the cyclic builder", "[automata]") {
  // 1^* 3^+ 4^+ 1^+ | 3^* 4^+ 1^+ 3^+ | 4^* 1^+ 3^+ 4^+
  Nfa n({1, 3, 4}, 0);
  auto branch = [&](Symbol head, std::vector<Symbol> rest) {
    State q = n.add_state();
    n.initials.push_back(q);
    n.add_transition(q, head, q);
    for (std::size_t i = 0; i < rest.size(); ++i) {
      State t = n.add_state(i + 1 == rest.size());
      n.add_transition(q, rest[i], t);
      n.add_transition(t, rest[i], t);
      q = t;
    }
  };
  branch(1, {3, 4, 1});
  branch(3, {4, 1, 3});
  branch(4, {1, 3, 4});
  auto from_nfa = minimize(determinize(n));
  auto built = build_cyclic_sequence_dfa(std::vector<Symbol>{3, 4, 1});
  CHECK(from_nfa == built);
  CHECK(oracle::language(from_nfa, {1, 3, 4}, 7) == oracle::language(built, {1, 3, 4}, 7));
}

TEST_CASE("block sequences reject invalid input", "[automata][errors]") {
  CHECK_THROWS_AS(build_fixed_sequence_dfa(std::vector<Symbol>{}), std::invalid_argument);
  CHECK_THROWS_AS(build_fixed_sequence_dfa(std::vector<Symbol>{2, 2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(build_cyclic_sequence_dfa(std::vector<Symbol>{1, 2, 1}), std::invalid_argument);
  CHECK_NOTHROW(build_fixed_sequence_dfa(std::vector<Symbol>{1, 2, 1}));
  auto single = build_cyclic_sequence_dfa(std::vector<Symbol>{5});
  CHECK(accepts(single, Word{5, 5}));
  CHECK_FALSE(accepts(single, Word{}));
}

TEST_CASE("rotation closure of cyclic sequences", "[automata][property]") {
  const std::vector<Symbol> seq{4, 1, 2, 3, 1};
  auto d = build_cyclic_sequence_dfa(seq);
  for (std::size_t r = 0; r < seq.size(); ++r) {
    Word rotated(seq.begin() + static_cast<std::ptrdiff_t>(r), seq.end());
    rotated.insert(rotated.end(), seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(r));
    CHECK(accepts(d, rotated));
    Word stretched;
    for (Symbol s : rotated) stretched.insert(stretched.end(), 2, s);
    CHECK(accepts(d, stretched));
  }
}

TEST_CASE("minimize preserves language, is idempotent and minimal", "[automata][property]") {
  std::mt19937_64 rng(20240601);
  for (int c = 0; c < 300; ++c) {
    auto d = random_dfa(rng, 5, 3);
    auto sigma = sigma_of(d);
    auto mn = minimize(d);
    CHECK(oracle::language(mn, sigma, 6) == oracle::language(d, sigma, 6));
    CHECK(minimize(mn) == mn);
    CHECK(mn.state_count() <= trim(d).state_count());
    // Distinct states have distinct residual languages.
    std::set<std::set<Word>> residuals;
    for (State q = 0; q < mn.state_count(); ++q) residuals.insert(residual(mn, q, mn.state_count()));
    CHECK(residuals.size() == mn.state_count());
  }
}

TEST_CASE("minimal automata of equal languages compare equal", "[automata]") {
  Dfa a({1, 2}, 3);
  a.set_transition(0, 0, 1);
  a.set_transition(1, 1, 2);
  a.set_transition(2, 1, 2);
  a.set_final(2);
  Dfa b({1, 2}, 4, 3);  // same language with permuted numbering and a dead state
  b.set_transition(3, 0, 2);
  b.set_transition(2, 1, 1);
  b.set_transition(1, 1, 1);
  b.set_transition(1, 0, 0);
  b.set_final(1);
  CHECK(minimize(a) == minimize(b));
}

TEST_CASE("trim and emptiness", "[automata]") {
  Dfa d({1}, 2);
  d.set_transition(0, 0, 1);
  CHECK(is_empty(d));
  CHECK(trim(d).state_count() == 0);
  CHECK(minimize(d).state_count() == 0);
  d.set_final(1);
  CHECK_FALSE(is_empty(d));
  CHECK(enumerate_minimal_solutions(Dfa({1}, 0)).empty());
}

TEST_CASE("determinize handles empty and overlapping NFAs", "[automata]") {
  Nfa none({1, 2}, 1);
  CHECK(determinize(none).state_count() == 0);
  auto d = build_cyclic_sequence_dfa(std::vector<Symbol>{2, 1});
  CHECK(minimize(determinize(as_nfa(d))) == d);
}

TEST_CASE("equivalent letters and quotient alphabet", "[automata]") {
  // 0 --a,b--> 1 --c--> 2(final); a and b are interchangeable.
  Dfa d({10, 20, 30}, 3);
  d.set_transition(0, 0, 1);
  d.set_transition(0, 1, 1);
  d.set_transition(1, 2, 2);
  d.set_final(2);
  auto p = equivalent_letter_classes(d);
  REQUIRE(p.classes.size() == 2);
  CHECK(p.classes[0] == std::vector<std::size_t>{0, 1});
  auto q = quotient_alphabet(d, p);
  CHECK(q.dfa.letter_count() == 2);
  CHECK(q.members.at(10) == std::vector<Symbol>{10, 20});
  CHECK(q.members.at(30) == std::vector<Symbol>{30});
  CHECK(accepts(q.dfa, Word{10, 30}));
  CHECK_FALSE(accepts(q.dfa, Word{20, 30}));  // 20 is not a representative
}

TEST_CASE("self-loop cycle detection", "[automata]") {
  Dfa d({1, 2}, 2);
  d.set_transition(0, 0, 1);
  d.set_transition(1, 0, 1);
  d.set_final(1);
  CHECK(has_only_self_loop_cycles(d));
  d.set_transition(1, 1, 0);
  CHECK_FALSE(has_only_self_loop_cycles(d));
  CHECK_THROWS_AS(enumerate_minimal_solutions(d), std::logic_error);
}

TEST_CASE("minimal solutions skip self-loops", "[automata]") {
  auto d = build_fixed_sequence_dfa(std::vector<Symbol>{2, 1, 3});
  auto sols = enumerate_minimal_solutions(d);
  REQUIRE(sols.size() == 1);
  CHECK(sols[0] == Word{2, 1, 3});
}

TEST_CASE("dot output lists transitions and finals", "[automata]") {
  auto d = build_fixed_sequence_dfa(std::vector<Symbol>{2, 1});
  std::ostringstream os;
  write_dot(os, d, "r");
  auto s = os.str();
  CHECK(s.find("digraph r {") == 0);
  CHECK(s.find("q0 -> q1 [label=\"2\"]") != std::string::npos);
  CHECK(s.find("doublecircle") != std::string::npos);
  std::size_t edges = 0;
  for (std::size_t at = 0; (at = s.find("[label=", at)) != std::string::npos; ++at) ++edges;
  CHECK(edges == d.transition_count());
}
