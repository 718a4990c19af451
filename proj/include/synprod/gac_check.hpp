#pragma once

// Randomised comparison of decomposition propagation against exhaustive
// enumeration of the original row/column system.

#include <synprod/decomposition.hpp>
#include <synprod/sync_product.hpp>

#include <cstdint>
#include <functional>
#include <memory>
#include <random>
#include <set>
#include <vector>

namespace synprod {

struct RandomSystem {
  std::vector<Dfa> rows;
  std::shared_ptr<ColumnConstraint> constraint;
  std::size_t n = 1;
  std::vector<Domain> v_domains;  // i*n + j
};

struct RandomSystemLimits {
  std::size_t max_rows = 3;
  std::size_t max_states = 4;
  std::size_t max_alphabet = 3;
  std::size_t max_columns = 4;
};

inline Dfa random_dfa(std::mt19937_64& rng, std::size_t max_states, std::size_t max_alphabet) {
  auto pick = [&](std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); };
  std::bernoulli_distribution coin(0.5);
  std::vector<Symbol> sigma;
  const std::size_t alpha = pick(1, max_alphabet);
  for (std::size_t s = 1; s <= alpha; ++s) sigma.push_back(static_cast<Symbol>(s));
  const std::size_t states = pick(1, max_states);
  Dfa d(sigma, states, 0);
  std::bernoulli_distribution has_edge(0.6);
  for (State q = 0; q < states; ++q) {
    d.set_final(q, coin(rng));
    for (std::size_t a = 0; a < sigma.size(); ++a)
      if (has_edge(rng)) d.set_transition(q, a, static_cast<State>(pick(0, states - 1)));
  }
  return d;
}

inline RandomSystem random_system(std::mt19937_64& rng, const RandomSystemLimits& lim = {}) {
  auto pick = [&](std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); };
  RandomSystem sys;
  const std::size_t m = pick(1, lim.max_rows);
  sys.n = pick(1, lim.max_columns);
  for (std::size_t i = 0; i < m; ++i) sys.rows.push_back(random_dfa(rng, lim.max_states, lim.max_alphabet));

  switch (pick(0, 2)) {
    case 0: sys.constraint = std::make_shared<AllDifferentConstraint>(m); break;
    case 1: sys.constraint = std::make_shared<TrueConstraint>(m); break;
    default: {
      // Random relation over the tuples of {1..max_alphabet}^m.
      auto allowed = std::make_shared<std::set<LetterTuple>>();
      std::bernoulli_distribution keep(0.5);
      LetterTuple t(m, 1);
      for (;;) {
        if (keep(rng)) allowed->insert(t);
        std::size_t i = 0;
        while (i < m && ++t[i] > static_cast<Symbol>(lim.max_alphabet)) t[i++] = 1;
        if (i == m) break;
      }
      sys.constraint = std::make_shared<PredicateConstraint>(
          m, [allowed](std::span<const Symbol> x) { return allowed->count(LetterTuple(x.begin(), x.end())) > 0; });
    }
  }

  std::bernoulli_distribution restrict(0.3);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < sys.n; ++j) {
      const auto sigma = sys.rows[i].alphabet();
      Domain dom(sigma.begin(), sigma.end());
      if (restrict(rng) && dom.size() > 1) {
        auto it = dom.begin();
        std::advance(it, static_cast<std::ptrdiff_t>(pick(0, dom.size() - 1)));
        dom.erase(it);
      }
      sys.v_domains.push_back(std::move(dom));
    }
  return sys;
}

/// Domains of the v-variables after decomposition propagation.
inline DomainState propagate_system(const RandomSystem& sys) {
  std::vector<Dfa> minimal;
  for (const auto& r : sys.rows) minimal.push_back(minimize(r));
  auto reduced = reduce_product(synchronised_product(minimal, *sys.constraint));
  auto net = build_decomposition(reduced, sys.n);
  for (std::size_t x = 0; x < sys.v_domains.size(); ++x) net.domains[x] = sys.v_domains[x];
  auto st = propagate_gac(net);
  st.domains.resize(sys.v_domains.size());
  return st;
}

inline bool same_supports(const DomainState& a, const DomainState& b) {
  if (a.failed || b.failed) return a.failed == b.failed;
  return a.domains == b.domains;
}

struct GacCheckReport {
  std::size_t cases = 0;
  std::size_t skipped = 0;
  std::size_t mismatches = 0;
  std::vector<std::size_t> mismatch_cases;
};

/// `tamper` lets a harness corrupt the propagated domains (negative control).
inline GacCheckReport run_gac_check(std::uint64_t seed, std::size_t cases, const RandomSystemLimits& lim = {},
                                    const std::function<void(DomainState&)>& tamper = {}) {
  std::mt19937_64 rng(seed);
  GacCheckReport rep;
  for (std::size_t c = 0; c < cases; ++c) {
    auto sys = random_system(rng, lim);
    ++rep.cases;
    DomainState expected;
    try {
      expected = brute_force_supports(sys.rows, *sys.constraint, sys.n, sys.v_domains);
    } catch (const OracleTooLarge&) {
      ++rep.skipped;
      continue;
    }
    auto got = propagate_system(sys);
    if (tamper) tamper(got);
    if (!same_supports(got, expected)) {
      ++rep.mismatches;
      rep.mismatch_cases.push_back(c);
    }
  }
  return rep;
}

}  // namespace synprod
