#pragma once

#include "balcov/linalg.hpp"
#include "balcov/rational.hpp"

namespace balcov {

// Exact feasibility / optimization for systems in standard equality form
//   A x = b,  x >= 0.
// Implemented as a dense two-phase simplex with Bland's anti-cycling rule;
// every number is an exact rational, no floating point anywhere.

struct LpResult {
  bool feasible = false;
  bool bounded = true;      // only meaningful for lp_minimize
  RationalVector x;         // primal solution when feasible
  Rational objective;       // optimal value of c^T x when feasible && bounded
  // When infeasible: a certificate y (one entry per constraint row) with
  //   y^T A <= 0 componentwise  and  y^T b > 0,
  // which certifies that no nonnegative solution of A x = b exists.
  RationalVector farkas;
};

/// Decide whether {x >= 0 : A x = b} is nonempty.
LpResult lp_feasible(const RationalMatrix& a, const RationalVector& b);

/// Minimize c^T x over {x >= 0 : A x = b}.
LpResult lp_minimize(const RationalMatrix& a, const RationalVector& b,
                     const RationalVector& c);

} // namespace balcov
