#include "balcov/balanced.hpp"

#include "balcov/errors.hpp"
#include "balcov/geometry.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace balcov {

namespace {

// Visit all size-k subsets of {0..m-1} in lexicographic tuple order.
template <typename F>
void for_each_combination(int m, int k, F&& visit) {
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    visit(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

} // namespace

BalancedProfile enumerate_minimal_balanced(const PointConfig& cfg, int cap) {
  cfg.validate();
  if (cfg.m() > cap)
    throw CapacityError("enumerate_minimal_balanced: m = " +
                        std::to_string(cfg.m()) + " exceeds cap " +
                        std::to_string(cap));
  const int m = cfg.m();
  const int max_size = std::min(m, cfg.dim + 1);

  BalancedProfile profile;
  profile.m = m;
  std::vector<IndexMask>& found = profile.minimal_balanced;

  for (int k = 1; k <= max_size; ++k) {
    for_each_combination(m, k, [&](const std::vector<int>& idx) {
      IndexMask mask = 0;
      for (int v : idx) mask |= IndexMask{1} << v;
      // A superset of a known member is balanced but not minimal.
      for (IndexMask f : found)
        if ((f & mask) == f) return;
      std::vector<RationalVector> pts;
      pts.reserve(idx.size());
      for (int v : idx) pts.push_back(cfg.points[v]);
      if (conv_membership(pts, cfg.r).inside()) found.push_back(mask);
    });
  }
  std::sort(found.begin(), found.end(), mask_lex_less);
  return profile;
}

bool is_balanced(const BalancedProfile& profile, IndexMask subset) {
  if (profile.m > 0 && (subset >> profile.m) != 0)
    throw InputError("is_balanced: subset uses an index outside the ground set");
  for (IndexMask f : profile.minimal_balanced)
    if ((f & subset) == f) return true;
  return false;
}

namespace {

void minimize_in_place(std::vector<IndexMask>& sets) {
  std::vector<IndexMask> keep;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < sets.size() && !dominated; ++j) {
      if (i == j) continue;
      const bool superset = (sets[j] & sets[i]) == sets[j];
      if (superset && (sets[i] != sets[j] || j < i)) dominated = true;
    }
    if (!dominated) keep.push_back(sets[i]);
  }
  sets = std::move(keep);
}

// Berge's procedure: minimal transversals of a hypergraph, edge by edge.
std::vector<IndexMask> minimal_transversals(const std::vector<IndexMask>& edges) {
  std::vector<IndexMask> trans{0u};
  for (IndexMask e : edges) {
    std::vector<IndexMask> next;
    for (IndexMask t : trans) {
      if ((t & e) != 0) {
        next.push_back(t); // already hits e
        continue;
      }
      for (IndexMask rest = e; rest != 0; rest &= rest - 1) {
        const IndexMask low = rest & (~rest + 1u);
        next.push_back(t | low);
      }
    }
    minimize_in_place(next);
    trans = std::move(next);
  }
  return trans;
}

} // namespace

SimplicialComplex nonbalanced_complex(const BalancedProfile& profile) {
  const IndexMask full = (IndexMask{1} << profile.m) - 1u;
  std::vector<IndexMask> facets;
  for (IndexMask t : minimal_transversals(profile.minimal_balanced))
    facets.push_back(full & ~t);
  return make_complex(profile.m, std::move(facets));
}

SimplicialComplex nonbalanced_complex(const PointConfig& cfg) {
  return nonbalanced_complex(enumerate_minimal_balanced(cfg));
}

bool bs_equivalent(const BalancedProfile& a, const BalancedProfile& b) {
  if (a.m != b.m)
    throw MismatchError("bs_equivalent: profiles over ground sets of size " +
                        std::to_string(a.m) + " and " + std::to_string(b.m));
  return a.minimal_balanced == b.minimal_balanced;
}

namespace {

// Iterated vertex invariants for isomorphism pruning: refine by the
// multiset of (edge co-member classes) until stable. Class ids are assigned
// in sorted-signature order so they are label-independent and comparable
// across two families.
std::vector<int> refine_classes(const std::vector<IndexMask>& edges, int m) {
  using Key = std::pair<int, std::vector<std::vector<int>>>;
  std::vector<int> cls(m, 0);
  for (int round = 0; round < m; ++round) {
    std::vector<std::vector<std::vector<int>>> sig(m);
    for (IndexMask e : edges) {
      const std::vector<int> verts = mask_to_indices(e);
      std::vector<int> edge_classes;
      for (int v : verts) edge_classes.push_back(cls[v]);
      std::sort(edge_classes.begin(), edge_classes.end());
      for (int v : verts) sig[v].push_back(edge_classes);
    }
    std::vector<Key> keys(m);
    for (int v = 0; v < m; ++v) {
      std::sort(sig[v].begin(), sig[v].end());
      keys[v] = Key(cls[v], std::move(sig[v]));
    }
    std::map<Key, int> renumber;
    for (int v = 0; v < m; ++v) renumber.emplace(keys[v], 0);
    int id = 0;
    for (auto& [key, value] : renumber) value = id++;
    std::vector<int> next(m);
    for (int v = 0; v < m; ++v) next[v] = renumber.at(keys[v]);
    if (next == cls) break;
    cls = std::move(next);
  }
  return cls;
}

bool extend_mapping(const std::vector<IndexMask>& ea, const std::vector<IndexMask>& eb,
                    const std::vector<int>& cls_a, const std::vector<int>& cls_b,
                    std::vector<int>& map_ab, std::vector<bool>& used_b, int v) {
  const int m = static_cast<int>(map_ab.size());
  if (v == m) {
    // Full candidate map: compare the relabeled families as sets.
    std::vector<IndexMask> mapped;
    mapped.reserve(ea.size());
    for (IndexMask e : ea) {
      IndexMask img = 0;
      for (int u : mask_to_indices(e)) img |= IndexMask{1} << map_ab[u];
      mapped.push_back(img);
    }
    std::sort(mapped.begin(), mapped.end());
    std::vector<IndexMask> sorted_b = eb;
    std::sort(sorted_b.begin(), sorted_b.end());
    return mapped == sorted_b;
  }
  for (int w = 0; w < m; ++w) {
    if (used_b[w] || cls_a[v] != cls_b[w]) continue;
    map_ab[v] = w;
    used_b[w] = true;
    // Prune: every fully-mapped edge of A must already be an edge of B.
    bool ok = true;
    for (IndexMask e : ea) {
      IndexMask img = 0;
      bool complete = true;
      for (int u : mask_to_indices(e)) {
        if (u <= v) {
          img |= IndexMask{1} << map_ab[u];
        } else {
          complete = false;
          break;
        }
      }
      if (complete &&
          std::find(eb.begin(), eb.end(), img) == eb.end()) {
        ok = false;
        break;
      }
    }
    if (ok && extend_mapping(ea, eb, cls_a, cls_b, map_ab, used_b, v + 1))
      return true;
    used_b[w] = false;
  }
  return false;
}

} // namespace

bool bs_equivalent_up_to_permutation(const BalancedProfile& a,
                                     const BalancedProfile& b) {
  if (a.m != b.m)
    throw MismatchError("bs_equivalent: profiles over ground sets of size " +
                        std::to_string(a.m) + " and " + std::to_string(b.m));
  if (a.minimal_balanced.size() != b.minimal_balanced.size()) return false;
  const std::vector<int> cls_a = refine_classes(a.minimal_balanced, a.m);
  const std::vector<int> cls_b = refine_classes(b.minimal_balanced, b.m);
  // Class ids are label-independent, so isomorphic families must agree on
  // the per-class vertex counts exactly.
  std::vector<int> count_a(a.m + 1, 0), count_b(b.m + 1, 0);
  for (int c : cls_a) ++count_a[c];
  for (int c : cls_b) ++count_b[c];
  if (count_a != count_b) return false;
  std::vector<int> map_ab(a.m, -1);
  std::vector<bool> used_b(b.m, false);
  return extend_mapping(a.minimal_balanced, b.minimal_balanced, cls_a, cls_b,
                        map_ab, used_b, 0);
}

} // namespace balcov
