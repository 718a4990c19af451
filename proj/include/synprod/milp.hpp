#pragma once

// Exact integer programming for the small stage-duration models:
//   maximize c.x  s.t.  A x <= b,  lo <= x (<= hi),  x integer
// with A, b, c non-negative. All arithmetic is over rationals.

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace synprod::milp {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

struct Row {
  std::vector<std::int64_t> coefficients;
  std::int64_t rhs = 0;
  friend bool operator==(const Row&, const Row&) = default;
};

struct MilpModel {
  std::size_t n_vars = 0;
  std::vector<std::int64_t> lower_bounds;
  std::vector<std::optional<std::int64_t>> upper_bounds;
  std::vector<Row> rows;
  std::vector<std::int64_t> objective;

  /// Model with n variables, lower bound `lo` each, objective sum x.
  static MilpModel uniform(std::size_t n, std::int64_t lo) {
    MilpModel m;
    m.n_vars = n;
    m.lower_bounds.assign(n, lo);
    m.upper_bounds.assign(n, std::nullopt);
    m.objective.assign(n, 1);
    return m;
  }

  void validate() const {
    if (lower_bounds.size() != n_vars || upper_bounds.size() != n_vars || objective.size() != n_vars)
      throw std::invalid_argument("MilpModel: bound/objective size mismatch");
    for (const auto& r : rows) {
      if (r.coefficients.size() != n_vars) throw std::invalid_argument("MilpModel: row size mismatch");
      if (r.rhs < 0) throw std::invalid_argument("MilpModel: negative right-hand side");
      for (auto a : r.coefficients)
        if (a < 0) throw std::invalid_argument("MilpModel: negative coefficient");
    }
    for (std::size_t k = 0; k < n_vars; ++k) {
      if (lower_bounds[k] < 0) throw std::invalid_argument("MilpModel: negative lower bound");
      if (objective[k] < 0) throw std::invalid_argument("MilpModel: negative objective coefficient");
    }
  }
};

enum class Status { Optimal, Infeasible };

struct LpResult {
  Status status = Status::Infeasible;
  Rational objective = 0;
  std::vector<Rational> values;
};

struct MilpResult {
  Status status = Status::Infeasible;
  std::int64_t objective = 0;
  std::vector<std::int64_t> values;
  std::size_t nodes = 0;
};

class UnboundedModel : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

namespace detail {

inline Integer floor_of(const Rational& r) {
  Integer q = boost::multiprecision::numerator(r) / boost::multiprecision::denominator(r);
  if (r < 0 && Rational(q) != r) --q;
  return q;
}

/// LP relaxation with per-variable bounds lo <= x <= hi (hi optional).
/// Shifting by lo keeps every right-hand side non-negative when feasible, so
/// the slack basis is a feasible start and no phase one is needed.
inline LpResult solve_bounded(const MilpModel& model, const std::vector<std::int64_t>& lo,
                              const std::vector<std::optional<std::int64_t>>& hi) {
  const std::size_t n = model.n_vars;
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  for (const auto& r : model.rows) {
    Integer shifted = r.rhs;
    for (std::size_t k = 0; k < n; ++k) shifted -= Integer(r.coefficients[k]) * lo[k];
    if (shifted < 0) return {};
    std::vector<Rational> coef(n);
    for (std::size_t k = 0; k < n; ++k) coef[k] = r.coefficients[k];
    a.push_back(std::move(coef));
    b.emplace_back(shifted);
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (!hi[k]) continue;
    if (*hi[k] < lo[k]) return {};
    std::vector<Rational> coef(n, Rational(0));
    coef[k] = 1;
    a.push_back(std::move(coef));
    b.emplace_back(*hi[k] - lo[k]);
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (model.objective[k] == 0) continue;
    bool capped = false;
    for (const auto& row : a) capped = capped || row[k] > 0;
    if (!capped) throw UnboundedModel("LP relaxation is unbounded in variable " + std::to_string(k + 1));
  }

  const std::size_t m = a.size();
  const std::size_t cols = n + m;
  std::vector<std::vector<Rational>> t(m, std::vector<Rational>(cols, Rational(0)));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k < n; ++k) t[i][k] = a[i][k];
    t[i][n + i] = 1;
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;
  // Reduced costs of the maximisation objective.
  std::vector<Rational> z(cols, Rational(0));
  for (std::size_t k = 0; k < n; ++k) z[k] = model.objective[k];

  for (;;) {
    // Bland: lowest-index improving column, lowest-index basic variable on ties.
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j)
      if (z[j] > 0) {
        enter = j;
        break;
      }
    if (enter == cols) break;
    std::size_t leave = m;
    Rational best_ratio;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rational ratio = b[i] / t[i][enter];
      if (leave == m || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == m) throw UnboundedModel("LP relaxation is unbounded");

    Rational pivot = t[leave][enter];
    for (auto& x : t[leave]) x /= pivot;
    b[leave] /= pivot;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      Rational f = t[i][enter];
      for (std::size_t j = 0; j < cols; ++j)
        if (t[leave][j] != 0) t[i][j] -= f * t[leave][j];
      b[i] -= f * b[leave];
    }
    Rational f = z[enter];
    for (std::size_t j = 0; j < cols; ++j)
      if (t[leave][j] != 0) z[j] -= f * t[leave][j];
    basis[leave] = enter;
  }

  LpResult res;
  res.status = Status::Optimal;
  res.values.assign(n, Rational(0));
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) res.values[basis[i]] = b[i];
  res.objective = 0;
  for (std::size_t k = 0; k < n; ++k) {
    res.values[k] += lo[k];
    res.objective += res.values[k] * model.objective[k];
  }
  return res;
}

}  // namespace detail

/// Exact LP relaxation (integrality dropped).
inline LpResult solve_lp(const MilpModel& model) {
  model.validate();
  return detail::solve_bounded(model, model.lower_bounds, model.upper_bounds);
}

/// Depth-first branch and bound on the most fractional variable (ties to the
/// lowest index), up-branch first, pruning nodes whose relaxation cannot beat
/// the incumbent.
inline MilpResult solve_milp(const MilpModel& model) {
  model.validate();
  MilpResult best;
  std::optional<Integer> incumbent;

  auto branch = [&](auto& self, const std::vector<std::int64_t>& lo,
                    const std::vector<std::optional<std::int64_t>>& hi) -> void {
    ++best.nodes;
    LpResult lp = detail::solve_bounded(model, lo, hi);
    if (lp.status == Status::Infeasible) return;
    // Integer objective coefficients make every integer point's value integral.
    Integer bound = detail::floor_of(lp.objective);
    if (incumbent && bound <= *incumbent) return;

    // Rows and objective are non-negative, so rounding every variable down
    // keeps the point feasible: a free incumbent candidate.
    {
      Integer rounded = 0;
      std::vector<std::int64_t> values;
      for (std::size_t k = 0; k < model.n_vars; ++k) {
        values.push_back(detail::floor_of(lp.values[k]).convert_to<std::int64_t>());
        rounded += Integer(values.back()) * model.objective[k];
      }
      if (!incumbent || rounded > *incumbent) {
        incumbent = rounded;
        best.status = Status::Optimal;
        best.objective = rounded.convert_to<std::int64_t>();
        best.values = std::move(values);
      }
      if (bound <= *incumbent) return;
    }

    std::size_t pick = model.n_vars;
    Rational best_gap;
    const Rational half(1, 2);
    for (std::size_t k = 0; k < model.n_vars; ++k) {
      Rational frac = lp.values[k] - Rational(detail::floor_of(lp.values[k]));
      if (frac == 0) continue;
      Rational gap = frac > half ? frac - half : half - frac;
      if (pick == model.n_vars || gap < best_gap) {
        pick = k;
        best_gap = gap;
      }
    }
    if (pick == model.n_vars) return;  // integral: already taken as the incumbent
    auto down = detail::floor_of(lp.values[pick]).convert_to<std::int64_t>();
    auto up_lo = lo;
    up_lo[pick] = down + 1;
    self(self, up_lo, hi);
    auto down_hi = hi;
    down_hi[pick] = down;
    self(self, lo, down_hi);
  };
  branch(branch, model.lower_bounds, model.upper_bounds);
  return best;
}

/// CPLEX LP-format text, variables named p1..pn.
inline void write_lp(std::ostream& os, const MilpModel& model) {
  auto term = [&](std::int64_t coef, std::size_t k, bool first) {
    if (!first) os << " + ";
    if (coef != 1) os << coef << ' ';
    os << 'p' << (k + 1);
  };
  os << "Maximize\n obj:";
  bool first = true;
  for (std::size_t k = 0; k < model.n_vars; ++k)
    if (model.objective[k] != 0) {
      os << (first ? " " : "");
      term(model.objective[k], k, first);
      first = false;
    }
  if (first) os << " 0";
  os << "\nSubject To\n";
  for (std::size_t r = 0; r < model.rows.size(); ++r) {
    os << " c" << (r + 1) << ":";
    bool f = true;
    for (std::size_t k = 0; k < model.n_vars; ++k)
      if (model.rows[r].coefficients[k] != 0) {
        os << (f ? " " : "");
        term(model.rows[r].coefficients[k], k, f);
        f = false;
      }
    if (f) os << " 0 p1";
    os << " <= " << model.rows[r].rhs << '\n';
  }
  os << "Bounds\n";
  for (std::size_t k = 0; k < model.n_vars; ++k) {
    os << ' ' << model.lower_bounds[k] << " <= p" << (k + 1);
    if (model.upper_bounds[k]) os << " <= " << *model.upper_bounds[k];
    os << '\n';
  }
  os << "General\n";
  for (std::size_t k = 0; k < model.n_vars; ++k) os << " p" << (k + 1);
  os << "\nEnd\n";
}

}  // namespace synprod::milp
