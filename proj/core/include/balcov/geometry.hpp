#pragma once

#include "balcov/rational.hpp"

#include <variant>
#include <vector>

namespace balcov {

// Supported size envelope for the exact convexity predicates.
inline constexpr int kMaxPoints = 20;
inline constexpr int kMaxDim = 6;

/// Convex coefficients witnessing r = sum lambda_i v_i, lambda >= 0, sum 1.
struct InsideCertificate {
  RationalVector coefficients;
};

/// Integer direction w (gcd 1) with <w, v_i - r> > 0 for every queried
/// point, witnessing that r lies strictly outside the convex hull.
struct OutsideCertificate {
  std::vector<Integer> direction;
};

class ConvexMembershipResult {
public:
  explicit ConvexMembershipResult(InsideCertificate in) : cert_(std::move(in)) {}
  explicit ConvexMembershipResult(OutsideCertificate out) : cert_(std::move(out)) {}

  bool inside() const { return std::holds_alternative<InsideCertificate>(cert_); }
  const InsideCertificate& inside_certificate() const;
  const OutsideCertificate& outside_certificate() const;

private:
  std::variant<InsideCertificate, OutsideCertificate> cert_;
};

/// Exact test r in conv(points). Certificates are verified by substitution
/// before they are returned. If r equals some point, the lowest such index
/// yields a unit coefficient vector.
ConvexMembershipResult conv_membership(const std::vector<RationalVector>& points,
                                       const RationalVector& r);

/// Dimension of the affine hull of the points (0 for a single point).
int affine_rank(const std::vector<RationalVector>& points);

/// Exact test r in relint(conv(points)), decided by maximizing the minimal
/// barycentric coordinate over all affine representations of r.
bool relint_membership(const std::vector<RationalVector>& points,
                       const RationalVector& r);

} // namespace balcov
