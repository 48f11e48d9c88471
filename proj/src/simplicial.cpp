#include "pathdepth/simplicial.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "pathdepth/rank.hpp"

namespace pathdepth {

SimplicialComplex SimplicialComplex::void_complex(std::size_t vertex_count) {
  return SimplicialComplex(vertex_count, {});
}

SimplicialComplex SimplicialComplex::from_faces(std::size_t vertex_count, std::vector<VertexSet> faces) {
  if (vertex_count > kMaxVertices) throw Error("complexes support at most 64 vertices");
  const VertexSet all = full_set(vertex_count);
  for (auto f : faces) {
    if (!is_subset(f, all)) throw Error("face " + format_vertex_set(f) + " has a vertex out of range");
  }
  std::sort(faces.begin(), faces.end(), vertex_set_less);
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  std::vector<VertexSet> facets;
  // larger sets first so each candidate is compared against kept maximal ones
  for (auto it = faces.rbegin(); it != faces.rend(); ++it) {
    const auto f = *it;
    if (std::none_of(facets.begin(), facets.end(), [&](VertexSet g) { return is_subset(f, g); })) {
      facets.push_back(f);
    }
  }
  std::sort(facets.begin(), facets.end(), vertex_set_less);
  return SimplicialComplex(vertex_count, std::move(facets));
}

bool SimplicialComplex::contains_face(VertexSet face) const {
  return std::any_of(facets_.begin(), facets_.end(), [&](VertexSet g) { return is_subset(face, g); });
}

int SimplicialComplex::dimension() const {
  if (is_void()) throw Error("the void complex has no dimension");
  int best = 0;
  for (auto f : facets_) best = std::max(best, cardinality(f));
  return best - 1;
}

std::vector<VertexSet> SimplicialComplex::faces() const {
  std::unordered_set<VertexSet> seen;
  for (auto facet : facets_) {
    // all subsets of the facet
    VertexSet sub = facet;
    while (true) {
      seen.insert(sub);
      if (sub == 0) break;
      sub = (sub - 1) & facet;
    }
  }
  std::vector<VertexSet> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), vertex_set_less);
  return out;
}

namespace {

// Depth-first growth of faces in increasing vertex order; a set is dropped
// as soon as it contains a generator support.
void grow_faces(VertexSet face, std::size_t next, std::size_t n, const std::vector<VertexSet>& nonfaces,
                std::vector<VertexSet>& maximal) {
  bool extended = false;
  for (std::size_t v = 0; v < n; ++v) {
    const VertexSet bit = VertexSet{1} << v;
    if (face & bit) continue;
    const VertexSet candidate = face | bit;
    const bool is_face = std::none_of(nonfaces.begin(), nonfaces.end(),
                                      [&](VertexSet g) { return is_subset(g, candidate); });
    if (!is_face) continue;
    extended = true;
    // only recurse in increasing order so each face is visited once
    if (v >= next) grow_faces(candidate, v + 1, n, nonfaces, maximal);
  }
  if (!extended) maximal.push_back(face);
}

}  // namespace

SimplicialComplex stanley_reisner(const MonomialIdeal& ideal) {
  if (!ideal.is_squarefree()) throw Error("stanley_reisner needs a squarefree ideal; polarize first");
  const auto n = ideal.num_vars();
  if (n > kMaxVertices) throw Error("complexes support at most 64 vertices");
  std::vector<VertexSet> nonfaces;
  for (const auto& g : ideal.generators()) nonfaces.push_back(g.support());
  if (nonfaces.empty()) return SimplicialComplex::from_faces(n, {full_set(n)});
  std::vector<VertexSet> maximal;
  grow_faces(0, 0, n, nonfaces, maximal);
  return SimplicialComplex::from_faces(n, std::move(maximal));
}

SimplicialComplex induced_subcomplex(const SimplicialComplex& complex, VertexSet subset) {
  if (complex.is_void()) return complex;
  std::vector<VertexSet> restricted;
  restricted.reserve(complex.facets().size());
  for (auto f : complex.facets()) restricted.push_back(f & subset);
  return SimplicialComplex::from_faces(complex.vertex_count(), std::move(restricted));
}

std::map<int, std::uint64_t> reduced_homology_of_faces(const std::vector<VertexSet>& faces,
                                                       FieldSpec field) {
  std::map<int, std::uint64_t> result;
  if (faces.empty()) return result;
  int top = -1;
  for (auto f : faces) top = std::max(top, cardinality(f) - 1);

  // faces grouped by dimension d, d = -1 .. top (slot d + 1)
  std::vector<std::vector<VertexSet>> by_dim(static_cast<std::size_t>(top) + 2);
  for (auto f : faces) by_dim[static_cast<std::size_t>(cardinality(f))].push_back(f);
  for (auto& level : by_dim) std::sort(level.begin(), level.end(), vertex_set_less);

  std::vector<std::unordered_map<VertexSet, std::uint32_t>> index(by_dim.size());
  for (std::size_t k = 0; k < by_dim.size(); ++k) {
    index[k].reserve(by_dim[k].size());
    for (std::uint32_t i = 0; i < by_dim[k].size(); ++i) index[k].emplace(by_dim[k][i], i);
  }

  // rank_of[k] = rank of the boundary from (k-1)-faces (slot k) to slot k-1
  std::vector<std::size_t> rank_of(by_dim.size() + 1, 0);
  for (std::size_t k = 1; k < by_dim.size(); ++k) {
    SparseMatrix boundary;
    boundary.rows = by_dim[k - 1].size();
    boundary.columns.reserve(by_dim[k].size());
    for (auto f : by_dim[k]) {
      std::vector<SparseEntry> column;
      int sign = 1;
      for (auto v : elements(f)) {
        const auto it = index[k - 1].find(f & ~(VertexSet{1} << v));
        if (it == index[k - 1].end()) throw Error("face list is not closed under taking subsets");
        column.push_back({it->second, sign});
        sign = -sign;
      }
      boundary.columns.push_back(std::move(column));
    }
    rank_of[k] = matrix_rank(boundary, field);
  }
  for (std::size_t k = 0; k < by_dim.size(); ++k) {
    const auto h = by_dim[k].size() - rank_of[k] - rank_of[k + 1];
    if (h != 0) result[static_cast<int>(k) - 1] = h;
  }
  return result;
}

std::map<int, std::uint64_t> reduced_homology_dims(const SimplicialComplex& complex, FieldSpec field) {
  if (complex.is_void()) return {};
  return reduced_homology_of_faces(complex.faces(), field);
}

}  // namespace pathdepth
