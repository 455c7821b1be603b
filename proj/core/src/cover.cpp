#include "balcov/cover.hpp"

#include "balcov/errors.hpp"

#include <string>

namespace balcov {

const RationalVector& WeightedCover::at(int vertex) const {
  auto it = weights.find(vertex);
  if (it == weights.end())
    throw InputError("cover: no weight vector for vertex " +
                     std::to_string(vertex + 1));
  return it->second;
}

IndexMask WeightedCover::support(int vertex) const {
  const RationalVector& w = at(vertex);
  IndexMask s = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (sgn(w[i]) > 0) s |= IndexMask{1} << i;
  return s;
}

void WeightedCover::validate() const {
  if (m < 1) throw InputError("cover: label count m must be >= 1");
  if (m > 31) throw CapacityError("cover: label count m must be <= 31");
  for (const auto& [vertex, w] : weights) {
    if (w.size() != static_cast<std::size_t>(m))
      throw InputError("cover: weight vector for vertex " +
                       std::to_string(vertex + 1) + " has wrong length");
    Rational total = 0;
    for (const auto& x : w) {
      if (sgn(x) < 0)
        throw InputError("cover: negative weight at vertex " +
                         std::to_string(vertex + 1));
      total += x;
    }
    if (total != 1)
      throw InputError("cover: weights at vertex " + std::to_string(vertex + 1) +
                       " do not sum to 1");
  }
}

WeightedCover cover_from_colors(int m, const std::map<int, int>& colors) {
  WeightedCover cover;
  cover.m = m;
  for (const auto& [vertex, label] : colors) {
    if (label < 0 || label >= m)
      throw InputError("coloring: label out of range at vertex " +
                       std::to_string(vertex + 1));
    RationalVector w(m, Rational(0));
    w[label] = 1;
    cover.weights.emplace(vertex, std::move(w));
  }
  return cover;
}

} // namespace balcov
