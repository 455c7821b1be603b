#include "balcov/complex.hpp"

#include "balcov/errors.hpp"

#include <algorithm>
#include <bit>

namespace balcov {

int mask_size(IndexMask s) { return std::popcount(s); }

std::vector<int> mask_to_indices(IndexMask s) {
  std::vector<int> out;
  for (int i = 0; s != 0; ++i, s >>= 1)
    if (s & 1u) out.push_back(i);
  return out;
}

IndexMask indices_to_mask(const std::vector<int>& idx, int vertex_count) {
  IndexMask m = 0;
  for (int v : idx) {
    if (v < 0 || v >= vertex_count)
      throw InputError("vertex index out of range: " + std::to_string(v + 1));
    if (m & (IndexMask{1} << v))
      throw InputError("duplicate vertex index: " + std::to_string(v + 1));
    m |= IndexMask{1} << v;
  }
  return m;
}

bool mask_lex_less(IndexMask a, IndexMask b) {
  // Walk the sorted vertex tuples in parallel; a shorter tuple that runs
  // out first (a prefix) comes first.
  while (a != 0 && b != 0) {
    const IndexMask low_a = a & (~a + 1u);
    const IndexMask low_b = b & (~b + 1u);
    if (low_a != low_b) return low_a < low_b;
    a ^= low_a;
    b ^= low_b;
  }
  return a == 0 && b != 0;
}

void SimplicialComplex::validate() const {
  if (vertex_count < 0 || vertex_count > 31)
    throw CapacityError("complex: vertex count must be within 0..31");
  const IndexMask full = (IndexMask{1} << vertex_count) - 1u;
  for (IndexMask f : facets) {
    if ((f & ~full) != 0)
      throw InputError("complex: facet uses a vertex outside the label range");
  }
  for (std::size_t i = 0; i < facets.size(); ++i) {
    for (std::size_t j = 0; j < facets.size(); ++j) {
      if (i != j && (facets[i] & facets[j]) == facets[i])
        throw InputError("complex: facets are not an antichain");
    }
  }
  for (std::size_t i = 1; i < facets.size(); ++i) {
    if (!mask_lex_less(facets[i - 1], facets[i]))
      throw InputError("complex: facets are not in canonical order");
  }
}

SimplicialComplex make_complex(int vertex_count, std::vector<IndexMask> faces) {
  std::vector<IndexMask> keep;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < faces.size() && !dominated; ++j) {
      if (i == j) continue;
      const bool subset = (faces[i] & faces[j]) == faces[i];
      // Drop strict subsets; for duplicates keep the first occurrence.
      if (subset && (faces[i] != faces[j] || j < i)) dominated = true;
    }
    if (!dominated) keep.push_back(faces[i]);
  }
  std::sort(keep.begin(), keep.end(), mask_lex_less);
  SimplicialComplex c{vertex_count, std::move(keep)};
  c.validate();
  return c;
}

bool complex_has_face(const SimplicialComplex& c, IndexMask face) {
  for (IndexMask f : c.facets)
    if ((face & f) == face) return true;
  return false;
}

} // namespace balcov
