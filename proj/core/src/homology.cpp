#include "balcov/homology.hpp"

#include "balcov/errors.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace balcov {

ChainComplex boundary_matrices(const SimplicialComplex& c,
                               std::size_t max_total_faces) {
  c.validate();
  ChainComplex cc;
  if (c.facets.empty() || (c.facets.size() == 1 && c.facets[0] == 0)) {
    return cc; // void complex or the empty-face complex: no faces of dim >= 0
  }

  // Downward closure, grouped by dimension.
  std::vector<std::map<IndexMask, int>> index_of; // per dim: face -> column
  std::size_t total = 0;
  {
    std::vector<IndexMask> stack(c.facets.begin(), c.facets.end());
    std::vector<std::vector<IndexMask>> seen_by_dim;
    std::vector<std::map<IndexMask, bool>> seen;
    int top_dim = 0;
    for (IndexMask f : c.facets) top_dim = std::max(top_dim, mask_size(f) - 1);
    seen.resize(top_dim + 1);
    while (!stack.empty()) {
      const IndexMask f = stack.back();
      stack.pop_back();
      if (f == 0) continue;
      const int dim = mask_size(f) - 1;
      auto [it, inserted] = seen[dim].emplace(f, true);
      if (!inserted) continue;
      if (++total > max_total_faces)
        throw CapacityError("complex closure exceeds the face-count cap");
      for (IndexMask rest = f; rest != 0; rest &= rest - 1)
        stack.push_back(f & ~(rest & (~rest + 1u)));
    }
    index_of.resize(top_dim + 1);
    cc.faces.resize(top_dim + 1);
    for (int k = 0; k <= top_dim; ++k) {
      for (const auto& [face, unused] : seen[k]) cc.faces[k].push_back(face);
      std::sort(cc.faces[k].begin(), cc.faces[k].end(), mask_lex_less);
      for (std::size_t j = 0; j < cc.faces[k].size(); ++j)
        index_of[k][cc.faces[k][j]] = static_cast<int>(j);
    }
  }

  const int top_dim = static_cast<int>(cc.faces.size()) - 1;
  cc.boundaries.resize(top_dim + 1);
  // Augmentation: every vertex maps to the empty face with coefficient 1.
  cc.boundaries[0].assign(1, std::vector<Integer>(cc.faces[0].size(), Integer(1)));
  for (int k = 1; k <= top_dim; ++k) {
    IntMatrix& d = cc.boundaries[k];
    d.assign(cc.faces[k - 1].size(),
             std::vector<Integer>(cc.faces[k].size(), Integer(0)));
    for (std::size_t col = 0; col < cc.faces[k].size(); ++col) {
      const std::vector<int> verts = mask_to_indices(cc.faces[k][col]);
      for (std::size_t j = 0; j < verts.size(); ++j) {
        const IndexMask sub = cc.faces[k][col] & ~(IndexMask{1} << verts[j]);
        d[index_of[k - 1].at(sub)][col] = (j % 2 == 0) ? 1 : -1;
      }
    }
  }
  return cc;
}

namespace {

// Position of the nonzero entry with smallest absolute value in the
// submatrix starting at (t, t); returns false if that submatrix is zero.
bool smallest_pivot(const IntMatrix& m, std::size_t t, std::size_t* pi,
                    std::size_t* pj) {
  bool found = false;
  Integer best;
  for (std::size_t i = t; i < m.size(); ++i) {
    for (std::size_t j = t; j < m[i].size(); ++j) {
      if (sgn(m[i][j]) == 0) continue;
      Integer a = abs(m[i][j]);
      if (!found || a < best) {
        found = true;
        best = a;
        *pi = i;
        *pj = j;
      }
    }
  }
  return found;
}

} // namespace

SmithResult smith_normal_form(IntMatrix m) {
  SmithResult res;
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  for (const auto& row : m)
    if (row.size() != cols) throw InputError("smith_normal_form: ragged matrix");

  std::size_t t = 0;
  while (t < rows && t < cols) {
    std::size_t pi = 0, pj = 0;
    if (!smallest_pivot(m, t, &pi, &pj)) break;
    std::swap(m[t], m[pi]);
    for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][pj]);

    bool clean = false;
    while (!clean) {
      clean = true;
      // Clear the pivot column by division; a nonzero remainder becomes the
      // new (smaller) pivot.
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (sgn(m[i][t]) == 0) continue;
        const Integer q = m[i][t] / m[t][t]; // truncated division
        if (sgn(q) != 0)
          for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (sgn(m[i][t]) != 0) {
          std::swap(m[t], m[i]);
          clean = false;
        }
      }
      if (!clean) continue;
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (sgn(m[t][j]) == 0) continue;
        const Integer q = m[t][j] / m[t][t];
        if (sgn(q) != 0)
          for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (sgn(m[t][j]) != 0) {
          for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][j]);
          clean = false;
        }
      }
      if (!clean) continue;
      // Enforce divisibility: fold a non-divisible entry into the pivot row
      // and restart the clearing loop.
      for (std::size_t i = t + 1; i < rows && clean; ++i) {
        for (std::size_t j = t + 1; j < cols && clean; ++j) {
          if (sgn(m[i][j] % m[t][t]) != 0) {
            for (std::size_t jj = t; jj < cols; ++jj) m[t][jj] += m[i][jj];
            clean = false;
          }
        }
      }
    }
    ++t;
  }

  res.rank = static_cast<int>(t);
  for (std::size_t i = 0; i < t; ++i) res.diagonal.push_back(abs(m[i][i]));
  return res;
}

const HomologyGroup* HomologyResult::at_degree(int degree) const {
  for (const auto& g : groups)
    if (g.degree == degree) return &g;
  return nullptr;
}

bool HomologyResult::trivial() const {
  for (const auto& g : groups)
    if (g.betti != 0 || !g.torsion.empty()) return false;
  return true;
}

HomologyResult reduced_homology(const SimplicialComplex& c) {
  HomologyResult res;
  if (c.facets.empty()) return res; // void complex: nothing in any degree
  if (c.facets.size() == 1 && c.facets[0] == 0) {
    // Only the empty face: reduced homology is Z in degree -1.
    res.groups.push_back(HomologyGroup{-1, 1, {}});
    return res;
  }

  const ChainComplex cc = boundary_matrices(c);
  const int top_dim = static_cast<int>(cc.faces.size()) - 1;

  std::vector<SmithResult> snf(top_dim + 1);
  for (int k = 0; k <= top_dim; ++k) snf[k] = smith_normal_form(cc.boundaries[k]);

  const auto face_count = [&](int k) -> int {
    if (k == -1) return 1; // the empty face
    return static_cast<int>(cc.faces[k].size());
  };
  const auto rank_of_boundary = [&](int k) -> int {
    // rank of d_k : C_k -> C_{k-1}; zero beyond the top dimension and for
    // the trivial map out of C_{-1}.
    if (k < 0 || k > top_dim) return 0;
    return snf[k].rank;
  };

  for (int k = -1; k <= top_dim; ++k) {
    HomologyGroup g;
    g.degree = k;
    g.betti = face_count(k) - rank_of_boundary(k) - rank_of_boundary(k + 1);
    if (g.betti < 0)
      throw TheoremViolationError("negative betti number computed");
    if (k + 1 <= top_dim) {
      for (const Integer& d : snf[k + 1].diagonal)
        if (d > 1) g.torsion.push_back(d);
    }
    res.groups.push_back(std::move(g));
  }
  return res;
}

bool verify_sphere_homology(const SimplicialComplex& c, int k) {
  const HomologyResult h = reduced_homology(c);
  if (c.facets.empty()) return false;
  for (const auto& g : h.groups) {
    if (!g.torsion.empty()) return false;
    const int expected = (g.degree == k - 1) ? 1 : 0;
    if (g.betti != expected) return false;
  }
  // Degrees above the top dimension carry no group; they must have been
  // expected to be zero.
  const int top_degree = h.groups.empty() ? -2 : h.groups.back().degree;
  return k - 1 <= top_degree;
}

std::optional<int> cone_apex_detect(const SimplicialComplex& c) {
  for (int a = 0; a < c.vertex_count; ++a) {
    bool apex = true;
    for (IndexMask f : c.facets) {
      if (!complex_has_face(c, f | (IndexMask{1} << a))) {
        apex = false;
        break;
      }
    }
    if (apex && !c.facets.empty()) return a;
  }
  return std::nullopt;
}

} // namespace balcov
