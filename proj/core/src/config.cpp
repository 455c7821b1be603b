#include "balcov/config.hpp"

#include "balcov/errors.hpp"

#include <string>

namespace balcov {

void PointConfig::validate() const {
  if (dim < 1) throw InputError("config: dim must be >= 1");
  if (points.empty()) throw InputError("config: at least one point required");
  if (r.size() != static_cast<std::size_t>(dim))
    throw InputError("config: base point has wrong dimension");
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].size() != static_cast<std::size_t>(dim))
      throw InputError("config: point " + std::to_string(i + 1) +
                       " has wrong dimension");
  }
}

PointConfig scale_transform(const PointConfig& cfg,
                            const std::vector<Rational>& lambda) {
  cfg.validate();
  if (lambda.size() != cfg.points.size())
    throw InputError("scale_transform: one factor per point required");
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (sgn(lambda[i]) <= 0)
      throw InputError("scale_transform: factor " + std::to_string(i + 1) +
                       " must be positive");
  }
  PointConfig out = cfg;
  for (std::size_t i = 0; i < out.points.size(); ++i) {
    for (int k = 0; k < cfg.dim; ++k)
      out.points[i][k] = lambda[i] * (cfg.points[i][k] - cfg.r[k]) + cfg.r[k];
  }
  return out;
}

} // namespace balcov
