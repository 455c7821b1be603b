#include "balcov/triangulation.hpp"

#include "balcov/errors.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace balcov {

int OrientedTriangulation::sign(int f) const {
  return signs.empty() ? 1 : signs[f];
}

void OrientedTriangulation::validate() const {
  if (dim < 0) throw InputError("triangulation: negative dimension");
  if (vertex_count < 0) throw InputError("triangulation: negative vertex count");
  if (!signs.empty() && signs.size() != facets.size())
    throw InputError("triangulation: one orientation sign per facet required");
  for (int s : signs) {
    if (s != 1 && s != -1)
      throw InputError("triangulation: orientation signs must be +1 or -1");
  }
  for (std::size_t f = 0; f < facets.size(); ++f) {
    const auto& tup = facets[f];
    if (tup.size() != static_cast<std::size_t>(dim) + 1)
      throw InputError("triangulation: facet " + std::to_string(f + 1) +
                       " has wrong arity");
    for (int v : tup) {
      if (v < 0 || v >= vertex_count)
        throw InputError("triangulation: facet " + std::to_string(f + 1) +
                         " uses an out-of-range vertex");
    }
    for (std::size_t i = 0; i < tup.size(); ++i)
      for (std::size_t j = i + 1; j < tup.size(); ++j)
        if (tup[i] == tup[j])
          throw InputError("triangulation: facet " + std::to_string(f + 1) +
                           " repeats a vertex");
  }
}

namespace {

// Sign of the permutation sorting `tuple` ascending (tuples are short).
int sort_parity(std::vector<int> tuple) {
  int parity = 1;
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    for (std::size_t j = i + 1; j < tuple.size(); ++j) {
      if (tuple[j] < tuple[i]) {
        std::swap(tuple[i], tuple[j]);
        parity = -parity;
      }
    }
  }
  return parity;
}

struct RidgeUse {
  int facet;
  int omitted_position;
  int induced_sign; // on the *sorted* ridge tuple
};

std::map<std::vector<int>, std::vector<RidgeUse>>
collect_ridges(const OrientedTriangulation& t) {
  std::map<std::vector<int>, std::vector<RidgeUse>> ridges;
  for (int f = 0; f < t.facet_count(); ++f) {
    const auto& tup = t.facets[f];
    for (std::size_t j = 0; j < tup.size(); ++j) {
      std::vector<int> ridge;
      ridge.reserve(tup.size() - 1);
      for (std::size_t i = 0; i < tup.size(); ++i)
        if (i != j) ridge.push_back(tup[i]);
      const int induced =
          t.sign(f) * ((j % 2 == 0) ? 1 : -1) * sort_parity(ridge);
      std::sort(ridge.begin(), ridge.end());
      ridges[ridge].push_back(RidgeUse{f, static_cast<int>(j), induced});
    }
  }
  return ridges;
}

} // namespace

bool orientation_coherence_check(const OrientedTriangulation& t) {
  t.validate();
  if (t.facets.empty()) return false;
  if (t.dim == 0) {
    int balance = 0;
    for (int f = 0; f < t.facet_count(); ++f) balance += t.sign(f);
    return balance == 0 && t.facet_count() % 2 == 0;
  }
  for (const auto& [ridge, uses] : collect_ridges(t)) {
    if (uses.size() != 2) return false;
    if (uses[0].induced_sign + uses[1].induced_sign != 0) return false;
  }
  return true;
}

OrientedTriangulation boundary_of(const OrientedTriangulation& t) {
  t.validate();
  if (t.dim == 0)
    throw InputError("boundary_of: 0-dimensional triangulations have no boundary complex");
  OrientedTriangulation b;
  b.dim = t.dim - 1;
  b.vertex_count = t.vertex_count;
  for (const auto& [ridge, uses] : collect_ridges(t)) {
    if (uses.size() == 1) {
      const RidgeUse& u = uses[0];
      const auto& tup = t.facets[u.facet];
      std::vector<int> btup;
      btup.reserve(tup.size() - 1);
      for (std::size_t i = 0; i < tup.size(); ++i)
        if (static_cast<int>(i) != u.omitted_position) btup.push_back(tup[i]);
      b.facets.push_back(std::move(btup));
      b.signs.push_back(t.sign(u.facet) *
                        ((u.omitted_position % 2 == 0) ? 1 : -1));
    } else if (uses.size() == 2) {
      if (uses[0].induced_sign + uses[1].induced_sign != 0)
        throw InputError("boundary_of: interior face with non-opposite induced "
                         "orientations (triangulation is not coherently oriented)");
    } else {
      throw InputError("boundary_of: face shared by more than two facets");
    }
  }
  return b;
}

OrientedTriangulation reversed(const OrientedTriangulation& t) {
  OrientedTriangulation out = t;
  if (out.signs.empty()) out.signs.assign(out.facets.size(), 1);
  for (int& s : out.signs) s = -s;
  return out;
}

} // namespace balcov
