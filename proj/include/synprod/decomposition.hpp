#pragma once

// One regular constraint over the column labels w_1..w_n plus n table
// constraints linking each column (v_1j, ..., v_mj) to w_j. The network is
// Berge-acyclic, so a fixpoint of per-constraint GAC is GAC on the whole
// row/column system.

#include <synprod/automata.hpp>
#include <synprod/sync_product.hpp>

#include <deque>
#include <numeric>
#include <nlohmann/json.hpp>
#include <set>
#include <stdexcept>
#include <vector>

namespace synprod {

using Domain = std::set<Symbol>;
using VarId = std::size_t;

struct NetworkConstraint {
  enum class Kind { Table, Regular };
  Kind kind;
  std::vector<VarId> scope;
};

struct BergeNetwork {
  Dfa reduced;
  TupleTable table;
  std::size_t m = 0;
  std::size_t n = 0;
  std::vector<Domain> domains;  // v_{i,j} at i*n + j, then w_j at m*n + j
  std::vector<NetworkConstraint> constraints;

  VarId v(std::size_t i, std::size_t j) const { return i * n + j; }
  VarId w(std::size_t j) const { return m * n + j; }
  std::size_t variable_count() const { return m * n + n; }
};

struct DomainState {
  std::vector<Domain> domains;
  bool failed = false;
};

class OracleTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Row alphabets default to the symbols that appear in each table column.
inline BergeNetwork build_decomposition(const Dfa& reduced, const TupleTable& table, std::size_t n,
                                        std::vector<std::vector<Symbol>> row_alphabets = {}) {
  if (n == 0) throw std::invalid_argument("build_decomposition: n must be at least 1");
  BergeNetwork net;
  net.reduced = reduced;
  net.table = table;
  net.m = table.arity;
  net.n = n;
  if (row_alphabets.empty()) {
    row_alphabets.resize(net.m);
    for (const auto& r : table.rows)
      for (std::size_t i = 0; i < net.m; ++i) row_alphabets[i].push_back(r.tuple[i]);
  }
  if (row_alphabets.size() != net.m) throw std::invalid_argument("build_decomposition: row alphabet count");

  net.domains.resize(net.variable_count());
  for (std::size_t i = 0; i < net.m; ++i)
    for (std::size_t j = 0; j < n; ++j) net.domains[net.v(i, j)] = Domain(row_alphabets[i].begin(), row_alphabets[i].end());
  for (std::size_t j = 0; j < n; ++j)
    net.domains[net.w(j)] = Domain(reduced.alphabet().begin(), reduced.alphabet().end());

  for (std::size_t j = 0; j < n; ++j) {
    NetworkConstraint t{NetworkConstraint::Kind::Table, {}};
    for (std::size_t i = 0; i < net.m; ++i) t.scope.push_back(net.v(i, j));
    t.scope.push_back(net.w(j));
    net.constraints.push_back(std::move(t));
  }
  NetworkConstraint reg{NetworkConstraint::Kind::Regular, {}};
  for (std::size_t j = 0; j < n; ++j) reg.scope.push_back(net.w(j));
  net.constraints.push_back(std::move(reg));
  return net;
}

inline BergeNetwork build_decomposition(const ReducedProduct& r, std::size_t n) {
  return build_decomposition(r.dfa, r.table, n, r.row_alphabets);
}

/// Scopes pairwise share at most one variable and the variable/constraint
/// incidence graph is a forest.
inline bool check_berge_acyclic(const BergeNetwork& net) {
  const auto& cs = net.constraints;
  for (std::size_t a = 0; a < cs.size(); ++a)
    for (std::size_t b = a + 1; b < cs.size(); ++b) {
      std::set<VarId> sa(cs[a].scope.begin(), cs[a].scope.end());
      std::size_t shared = 0;
      for (VarId x : std::set<VarId>(cs[b].scope.begin(), cs[b].scope.end())) shared += sa.count(x);
      if (shared > 1) return false;
    }

  // Union-find over variables [0, V) and constraints [V, V + C).
  const std::size_t nv = net.variable_count();
  std::vector<std::size_t> parent(nv + cs.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t c = 0; c < cs.size(); ++c) {
    std::set<VarId> scope(cs[c].scope.begin(), cs[c].scope.end());
    if (scope.size() != cs[c].scope.size()) return false;  // repeated variable is a 2-cycle
    for (VarId x : scope) {
      auto rx = find(x), rc = find(nv + c);
      if (rx == rc) return false;
      parent[rx] = rc;
    }
  }
  return true;
}

namespace detail {

inline bool filter_table(const TupleTable& table, std::span<const VarId> scope, std::vector<Domain>& dom,
                         std::vector<VarId>& changed) {
  const std::size_t k = scope.size();
  std::vector<Domain> supported(k);
  for (const auto& row : table.rows) {
    bool ok = true;
    for (std::size_t i = 0; ok && i + 1 < k; ++i) ok = dom[scope[i]].count(row.tuple[i]) > 0;
    ok = ok && dom[scope[k - 1]].count(row.global) > 0;
    if (!ok) continue;
    for (std::size_t i = 0; i + 1 < k; ++i) supported[i].insert(row.tuple[i]);
    supported[k - 1].insert(row.global);
  }
  bool wiped = false;
  for (std::size_t i = 0; i < k; ++i) {
    if (supported[i].size() != dom[scope[i]].size()) {
      dom[scope[i]] = std::move(supported[i]);
      changed.push_back(scope[i]);
    }
    wiped = wiped || dom[scope[i]].empty();
  }
  return !wiped;
}

/// GAC for regular on the n-layer unfolding of the automaton.
inline bool filter_regular(const Dfa& d, std::span<const VarId> scope, std::vector<Domain>& dom,
                           std::vector<VarId>& changed) {
  const std::size_t n = scope.size();
  const std::size_t qn = d.state_count();
  auto wipe_all = [&] {
    for (VarId x : scope)
      if (!dom[x].empty()) {
        dom[x].clear();
        changed.push_back(x);
      }
    return false;
  };
  if (qn == 0) return wipe_all();

  std::vector<std::vector<bool>> fwd(n + 1, std::vector<bool>(qn, false));
  fwd[0][d.initial()] = true;
  for (std::size_t j = 0; j < n; ++j)
    for (State q = 0; q < qn; ++q) {
      if (!fwd[j][q]) continue;
      for (Symbol s : dom[scope[j]])
        if (auto a = d.letter_of(s))
          if (State t = d.next(q, *a); t != kNoState) fwd[j + 1][t] = true;
    }
  std::vector<std::vector<bool>> bwd(n + 1, std::vector<bool>(qn, false));
  for (State q = 0; q < qn; ++q) bwd[n][q] = fwd[n][q] && d.is_final(q);
  std::vector<Domain> supported(n);
  for (std::size_t j = n; j-- > 0;)
    for (State q = 0; q < qn; ++q) {
      if (!fwd[j][q]) continue;
      for (Symbol s : dom[scope[j]])
        if (auto a = d.letter_of(s))
          if (State t = d.next(q, *a); t != kNoState && bwd[j + 1][t]) {
            bwd[j][q] = true;
            supported[j].insert(s);
          }
    }
  if (!bwd[0][d.initial()]) return wipe_all();
  for (std::size_t j = 0; j < n; ++j)
    if (supported[j].size() != dom[scope[j]].size()) {
      dom[scope[j]] = std::move(supported[j]);
      changed.push_back(scope[j]);
    }
  return true;
}

}  // namespace detail

/// Fixpoint of table and regular GAC, constraints revisited when a variable
/// in their scope shrinks. Starts from the network's domains.
inline DomainState propagate_gac(const BergeNetwork& net) {
  DomainState st{net.domains, false};
  const auto& cs = net.constraints;
  std::vector<std::vector<std::size_t>> watchers(net.variable_count());
  for (std::size_t c = 0; c < cs.size(); ++c)
    for (VarId x : cs[c].scope) watchers[x].push_back(c);

  for (const auto& d : st.domains)
    if (d.empty()) {
      st.failed = true;
      return st;
    }

  std::deque<std::size_t> queue(cs.size());
  std::iota(queue.begin(), queue.end(), 0);
  std::vector<bool> queued(cs.size(), true);
  std::vector<VarId> changed;
  while (!queue.empty()) {
    std::size_t c = queue.front();
    queue.pop_front();
    queued[c] = false;
    changed.clear();
    bool ok = cs[c].kind == NetworkConstraint::Kind::Table
                  ? detail::filter_table(net.table, cs[c].scope, st.domains, changed)
                  : detail::filter_regular(net.reduced, cs[c].scope, st.domains, changed);
    if (!ok) {
      st.failed = true;
      return st;
    }
    for (VarId x : changed)
      for (std::size_t w : watchers[x])
        if (w != c && !queued[w]) {
          queued[w] = true;
          queue.push_back(w);
        }
  }
  return st;
}

/// Ground-truth supports by enumerating every m x n matrix within the given
/// v-domains (indexed like BergeNetwork: i*n + j). Returned domains cover the
/// v-variables only.
inline DomainState brute_force_supports(std::span<const Dfa> rows, const ColumnConstraint& c, std::size_t n,
                                        const std::vector<Domain>& domains, double limit = 1e7) {
  const std::size_t m = rows.size();
  if (domains.size() < m * n) throw std::invalid_argument("brute_force_supports: missing domains");
  double space = 1;
  for (std::size_t x = 0; x < m * n; ++x) space *= static_cast<double>(domains[x].size());
  if (space > limit) throw OracleTooLarge("brute_force_supports: assignment space too large");

  DomainState st;
  st.domains.assign(m * n, Domain{});
  std::vector<std::vector<Symbol>> values(m * n);
  for (std::size_t x = 0; x < m * n; ++x) values[x].assign(domains[x].begin(), domains[x].end());
  bool any = true;
  for (const auto& v : values) any = any && !v.empty();
  if (!any || m == 0) {
    st.failed = true;
    return st;
  }

  // Rows are independent apart from the columns, so list each row's accepted
  // words first and then combine them.
  std::vector<std::vector<Word>> words(m);
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<std::size_t> pos(n, 0);
    Word row(n);
    for (;;) {
      for (std::size_t j = 0; j < n; ++j) row[j] = values[i * n + j][pos[j]];
      if (accepts(rows[i], row)) words[i].push_back(row);
      std::size_t j = 0;
      while (j < n && ++pos[j] == values[i * n + j].size()) pos[j++] = 0;
      if (j == n) break;
    }
    if (words[i].empty()) {
      st.failed = true;
      return st;
    }
  }

  std::vector<std::size_t> pick(m, 0);
  std::vector<Symbol> column(m);
  bool found = false;
  for (;;) {
    bool ok = true;
    for (std::size_t j = 0; ok && j < n; ++j) {
      for (std::size_t i = 0; i < m; ++i) column[i] = words[i][pick[i]][j];
      ok = c.holds(column);
    }
    if (ok) {
      found = true;
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) st.domains[i * n + j].insert(words[i][pick[i]][j]);
    }
    std::size_t i = 0;
    while (i < m && ++pick[i] == words[i].size()) pick[i++] = 0;
    if (i == m) break;
  }
  st.failed = !found;
  return st;
}

inline nlohmann::json to_json(const BergeNetwork& net) {
  nlohmann::json j;
  j["m"] = net.m;
  j["n"] = net.n;
  nlohmann::json a;
  a["states"] = net.reduced.state_count();
  a["alphabet"] = std::vector<Symbol>(net.reduced.alphabet().begin(), net.reduced.alphabet().end());
  if (net.reduced.state_count() > 0) a["initial"] = net.reduced.initial();
  std::vector<State> finals;
  auto transitions = nlohmann::json::array();
  for (State q = 0; q < net.reduced.state_count(); ++q) {
    if (net.reduced.is_final(q)) finals.push_back(q);
    for (std::size_t l = 0; l < net.reduced.letter_count(); ++l)
      if (State t = net.reduced.next(q, l); t != kNoState)
        transitions.push_back({{"from", q}, {"letter", net.reduced.symbol(l)}, {"to", t}});
  }
  a["finals"] = finals;
  a["transitions"] = transitions;
  j["automaton"] = a;
  auto rows = nlohmann::json::array();
  for (const auto& r : net.table.rows) rows.push_back({{"tuple", r.tuple}, {"global", r.global}});
  j["table"] = rows;
  return j;
}

}  // namespace synprod
