#include "balcov/lp.hpp"

#include "balcov/errors.hpp"

#include <limits>
#include <utility>

namespace balcov {

namespace {

// Dense simplex tableau over exact rationals.
//
// Layout: rows 0..m-1 hold the constraints, row m holds reduced costs.
// Columns 0..n-1 are structural variables, n..n+m-1 the artificials from
// phase one, and the last column is the right-hand side / objective value.
struct Tableau {
  std::size_t m, n;                // constraint rows, structural columns
  std::vector<RationalVector> t;   // (m+1) x (n+m+1)
  std::vector<std::size_t> basis;  // per row: index of the basic variable
  std::vector<int> row_flip;       // +-1: original row i was multiplied by this

  std::size_t cols() const { return n + m + 1; }
  std::size_t rhs() const { return n + m; }
};

Tableau make_tableau(const RationalMatrix& a, const RationalVector& b) {
  Tableau tab;
  tab.m = a.size();
  tab.n = tab.m == 0 ? 0 : a[0].size();
  for (const auto& row : a) {
    if (row.size() != tab.n) throw InputError("lp: ragged constraint matrix");
  }
  if (b.size() != tab.m) throw InputError("lp: rhs size mismatch");

  tab.t.assign(tab.m + 1, RationalVector(tab.cols(), Rational(0)));
  tab.basis.resize(tab.m);
  tab.row_flip.assign(tab.m, 1);
  for (std::size_t i = 0; i < tab.m; ++i) {
    const bool flip = sgn(b[i]) < 0;
    tab.row_flip[i] = flip ? -1 : 1;
    for (std::size_t j = 0; j < tab.n; ++j)
      tab.t[i][j] = flip ? -a[i][j] : a[i][j];
    tab.t[i][tab.n + i] = 1;
    tab.t[i][tab.rhs()] = flip ? -b[i] : b[i];
    tab.basis[i] = tab.n + i;
  }
  return tab;
}

void pivot(Tableau& tab, std::size_t prow, std::size_t pcol) {
  RationalVector& pr = tab.t[prow];
  const Rational pivot_value = pr[pcol];
  for (auto& v : pr) v /= pivot_value;
  for (std::size_t i = 0; i <= tab.m; ++i) {
    if (i == prow) continue;
    RationalVector& row = tab.t[i];
    if (sgn(row[pcol]) == 0) continue;
    const Rational factor = row[pcol];
    for (std::size_t j = 0; j < tab.cols(); ++j) row[j] -= factor * pr[j];
  }
  tab.basis[prow] = pcol;
}

// Bland's rule: entering = lowest-index column with negative reduced cost,
// leaving = ratio test with ties broken by lowest basic-variable index.
// Returns false when the current basis is optimal, throws on unbounded.
bool simplex_step(Tableau& tab, std::size_t usable_cols, bool* unbounded) {
  const RationalVector& cost = tab.t[tab.m];
  std::size_t enter = std::numeric_limits<std::size_t>::max();
  for (std::size_t j = 0; j < usable_cols; ++j) {
    if (sgn(cost[j]) < 0) {
      enter = j;
      break;
    }
  }
  if (enter == std::numeric_limits<std::size_t>::max()) return false;

  std::size_t leave = std::numeric_limits<std::size_t>::max();
  Rational best_ratio;
  for (std::size_t i = 0; i < tab.m; ++i) {
    if (sgn(tab.t[i][enter]) <= 0) continue;
    Rational ratio = tab.t[i][tab.rhs()] / tab.t[i][enter];
    if (leave == std::numeric_limits<std::size_t>::max() || ratio < best_ratio ||
        (ratio == best_ratio && tab.basis[i] < tab.basis[leave])) {
      leave = i;
      best_ratio = ratio;
    }
  }
  if (leave == std::numeric_limits<std::size_t>::max()) {
    *unbounded = true;
    return false;
  }
  pivot(tab, leave, enter);
  return true;
}

void run_simplex(Tableau& tab, std::size_t usable_cols, bool* unbounded) {
  *unbounded = false;
  while (simplex_step(tab, usable_cols, unbounded)) {
  }
}

// Install the phase-one objective (minimize the sum of artificials).
void load_phase_one_costs(Tableau& tab) {
  RationalVector& cost = tab.t[tab.m];
  for (auto& v : cost) v = 0;
  for (std::size_t j = tab.n; j < tab.n + tab.m; ++j) cost[j] = 1;
  // Price out the initial (artificial) basis.
  for (std::size_t i = 0; i < tab.m; ++i)
    for (std::size_t j = 0; j < tab.cols(); ++j) cost[j] -= tab.t[i][j];
}

RationalVector extract_primal(const Tableau& tab) {
  RationalVector x(tab.n, Rational(0));
  for (std::size_t i = 0; i < tab.m; ++i)
    if (tab.basis[i] < tab.n) x[tab.basis[i]] = tab.t[i][tab.rhs()];
  return x;
}

// Farkas certificate from an optimal phase-one tableau with positive value.
// y' = c_B B^{-1} is read off under the artificial columns; undo row flips.
RationalVector extract_farkas(const Tableau& tab) {
  RationalVector y(tab.m, Rational(0));
  const RationalVector& cost = tab.t[tab.m];
  for (std::size_t i = 0; i < tab.m; ++i) {
    Rational yi = Rational(1) - cost[tab.n + i];
    y[i] = tab.row_flip[i] < 0 ? -yi : yi;
  }
  return y;
}

// After a feasible phase one, pivot artificials out of the basis so phase
// two never re-enters them. Rows that cannot be pivoted out are redundant
// constraints; they are left in place (their artificial stays at zero and
// the column is excluded from pricing).
void drive_out_artificials(Tableau& tab) {
  for (std::size_t i = 0; i < tab.m; ++i) {
    if (tab.basis[i] < tab.n) continue;
    for (std::size_t j = 0; j < tab.n; ++j) {
      if (sgn(tab.t[i][j]) != 0) {
        pivot(tab, i, j);
        break;
      }
    }
  }
}

} // namespace

LpResult lp_feasible(const RationalMatrix& a, const RationalVector& b) {
  Tableau tab = make_tableau(a, b);
  load_phase_one_costs(tab);
  bool unbounded = false;
  run_simplex(tab, tab.n + tab.m, &unbounded);
  // Phase one is bounded below by zero, so this cannot trigger.
  if (unbounded) throw TheoremViolationError("phase-one simplex reported unbounded");

  LpResult res;
  const Rational value = -tab.t[tab.m][tab.rhs()];
  if (sgn(value) > 0) {
    res.feasible = false;
    res.farkas = extract_farkas(tab);
    return res;
  }
  res.feasible = true;
  res.x = extract_primal(tab);
  res.objective = 0;
  return res;
}

LpResult lp_minimize(const RationalMatrix& a, const RationalVector& b,
                     const RationalVector& c) {
  const std::size_t n = a.empty() ? c.size() : a[0].size();
  if (c.size() != n) throw InputError("lp: objective size mismatch");

  Tableau tab = make_tableau(a, b);
  load_phase_one_costs(tab);
  bool unbounded = false;
  run_simplex(tab, tab.n + tab.m, &unbounded);
  if (unbounded) throw TheoremViolationError("phase-one simplex reported unbounded");

  LpResult res;
  const Rational phase1 = -tab.t[tab.m][tab.rhs()];
  if (sgn(phase1) > 0) {
    res.feasible = false;
    res.farkas = extract_farkas(tab);
    return res;
  }
  drive_out_artificials(tab);

  // Install the real objective and price out the current basis.
  RationalVector& cost = tab.t[tab.m];
  for (std::size_t j = 0; j < tab.cols(); ++j) cost[j] = 0;
  for (std::size_t j = 0; j < tab.n; ++j) cost[j] = c[j];
  for (std::size_t i = 0; i < tab.m; ++i) {
    if (tab.basis[i] >= tab.n) continue; // redundant row, artificial at zero
    const Rational cb = c[tab.basis[i]];
    if (sgn(cb) == 0) continue;
    for (std::size_t j = 0; j < tab.cols(); ++j) cost[j] -= cb * tab.t[i][j];
  }
  run_simplex(tab, tab.n, &unbounded); // artificials excluded from pricing
  res.feasible = true;
  if (unbounded) {
    res.bounded = false;
    return res;
  }
  res.bounded = true;
  res.x = extract_primal(tab);
  res.objective = -tab.t[tab.m][tab.rhs()];
  return res;
}

} // namespace balcov
