#include "balcov/geometry.hpp"

#include "balcov/errors.hpp"
#include "balcov/linalg.hpp"
#include "balcov/lp.hpp"

#include <string>

namespace balcov {

const InsideCertificate& ConvexMembershipResult::inside_certificate() const {
  if (!inside()) throw std::logic_error("result is Outside, no inside certificate");
  return std::get<InsideCertificate>(cert_);
}

const OutsideCertificate& ConvexMembershipResult::outside_certificate() const {
  if (inside()) throw std::logic_error("result is Inside, no outside certificate");
  return std::get<OutsideCertificate>(cert_);
}

namespace {

void check_envelope(const std::vector<RationalVector>& points,
                    const RationalVector& r) {
  if (points.empty()) throw InputError("convexity predicate: empty point set");
  const std::size_t d = r.size();
  if (d == 0) throw InputError("convexity predicate: zero-dimensional ambient space");
  for (const auto& p : points) {
    if (p.size() != d)
      throw InputError("convexity predicate: point/base dimension mismatch");
  }
  if (points.size() > static_cast<std::size_t>(kMaxPoints))
    throw CapacityError("convexity predicate: more than " +
                        std::to_string(kMaxPoints) + " points");
  if (d > static_cast<std::size_t>(kMaxDim))
    throw CapacityError("convexity predicate: dimension above " +
                        std::to_string(kMaxDim));
}

} // namespace

ConvexMembershipResult conv_membership(const std::vector<RationalVector>& points,
                                       const RationalVector& r) {
  check_envelope(points, r);
  const std::size_t d = r.size();
  const std::size_t n = points.size();

  // Degenerate coincidence: r equal to a point yields a unit certificate.
  for (std::size_t i = 0; i < n; ++i) {
    if (points[i] == r) {
      InsideCertificate cert;
      cert.coefficients.assign(n, Rational(0));
      cert.coefficients[i] = 1;
      return ConvexMembershipResult(std::move(cert));
    }
  }

  // Feasibility of  sum lambda_i v_i = r, sum lambda_i = 1, lambda >= 0.
  RationalMatrix a(d + 1, RationalVector(n, Rational(0)));
  RationalVector b(d + 1, Rational(0));
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t i = 0; i < n; ++i) a[k][i] = points[i][k];
    b[k] = r[k];
  }
  for (std::size_t i = 0; i < n; ++i) a[d][i] = 1;
  b[d] = 1;

  LpResult lp = lp_feasible(a, b);
  if (lp.feasible) {
    // Verify the certificate by substitution before handing it out.
    Rational total = 0;
    RationalVector reproduced(d, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
      if (sgn(lp.x[i]) < 0)
        throw TheoremViolationError("inside certificate has a negative coefficient");
      total += lp.x[i];
      for (std::size_t k = 0; k < d; ++k) reproduced[k] += lp.x[i] * points[i][k];
    }
    if (total != 1 || reproduced != r)
      throw TheoremViolationError("inside certificate does not reproduce r");
    return ConvexMembershipResult(InsideCertificate{std::move(lp.x)});
  }

  // Farkas row vector (u, u0): u^T v_i + u0 <= 0 and u^T r + u0 > 0,
  // hence w = -u strictly separates: <w, v_i - r> > 0 for all i.
  RationalVector w(d);
  for (std::size_t k = 0; k < d; ++k) w[k] = -lp.farkas[k];
  OutsideCertificate cert{primitive_integer_direction(w)};
  for (std::size_t i = 0; i < n; ++i) {
    Rational s = 0;
    for (std::size_t k = 0; k < d; ++k)
      s += Rational(cert.direction[k]) * (points[i][k] - r[k]);
    if (sgn(s) <= 0)
      throw TheoremViolationError("outside certificate fails to separate");
  }
  return ConvexMembershipResult(std::move(cert));
}

int affine_rank(const std::vector<RationalVector>& points) {
  if (points.empty()) throw InputError("affine_rank: empty point set");
  const std::size_t d = points[0].size();
  for (const auto& p : points) {
    if (p.size() != d) throw InputError("affine_rank: ragged point set");
  }
  if (points.size() == 1) return 0;
  RationalMatrix diffs;
  diffs.reserve(points.size() - 1);
  for (std::size_t i = 1; i < points.size(); ++i)
    diffs.push_back(vec_sub(points[i], points[0]));
  return matrix_rank(std::move(diffs));
}

bool relint_membership(const std::vector<RationalVector>& points,
                       const RationalVector& r) {
  check_envelope(points, r);
  const std::size_t d = r.size();
  const std::size_t n = points.size();

  // Write lambda_i = mu_i + t with mu_i >= 0 and free t = tp - tm:
  //   sum mu_i v_i + t * (sum v_i) = r,   sum mu_i + n t = 1,
  // and maximize t. r lies in the relative interior iff t_max > 0.
  RationalVector col_sum(d, Rational(0));
  for (const auto& p : points) col_sum = vec_add(col_sum, p);

  const std::size_t vars = n + 2; // mu_1..mu_n, tp, tm
  RationalMatrix a(d + 1, RationalVector(vars, Rational(0)));
  RationalVector b(d + 1, Rational(0));
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t i = 0; i < n; ++i) a[k][i] = points[i][k];
    a[k][n] = col_sum[k];
    a[k][n + 1] = -col_sum[k];
    b[k] = r[k];
  }
  for (std::size_t i = 0; i < n; ++i) a[d][i] = 1;
  a[d][n] = Rational(static_cast<long>(n));
  a[d][n + 1] = -Rational(static_cast<long>(n));
  b[d] = 1;

  RationalVector c(vars, Rational(0));
  c[n] = -1; // minimize -t
  c[n + 1] = 1;

  LpResult lp = lp_minimize(a, b, c);
  if (!lp.feasible) return false; // r outside the affine hull
  if (!lp.bounded)
    throw TheoremViolationError("relint objective unbounded (t <= 1/n always)");
  return sgn(lp.objective) < 0; // t_max = -objective > 0
}

} // namespace balcov
