#pragma once

#include <cstdint>
#include <vector>

namespace balcov {

/// Vertex subsets are bitmasks: bit i stands for (0-based) vertex i.
using IndexMask = std::uint32_t;

int mask_size(IndexMask s);
std::vector<int> mask_to_indices(IndexMask s);
IndexMask indices_to_mask(const std::vector<int>& idx, int vertex_count);

/// Compare masks as *sorted vertex tuples* in lexicographic order
/// ({0,3} < {1,2}, {0} < {0,1}). This is the canonical face/facet order.
bool mask_lex_less(IndexMask a, IndexMask b);

/// An abstract simplicial complex given by its facets (the inclusion-maximal
/// faces). Faces are implied by downward closure. `facets = {}` is the void
/// complex; `facets = {0}` is the complex whose only face is the empty face.
struct SimplicialComplex {
  int vertex_count = 0;
  std::vector<IndexMask> facets; // antichain, sorted by mask_lex_less

  // Antichain, canonical order, label range: InputError on violations,
  // CapacityError beyond the 31-vertex mask representation.
  void validate() const;
};

/// Build a complex from arbitrary faces: dominated faces are dropped and
/// the rest sorted canonically.
SimplicialComplex make_complex(int vertex_count, std::vector<IndexMask> faces);

/// True iff `face` is contained in some facet.
bool complex_has_face(const SimplicialComplex& c, IndexMask face);

} // namespace balcov
