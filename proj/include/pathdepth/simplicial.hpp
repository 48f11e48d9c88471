#pragma once

// Facet-represented simplicial complexes and exact reduced homology.

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "pathdepth/field.hpp"
#include "pathdepth/monomial.hpp"
#include "pathdepth/vertex_set.hpp"

namespace pathdepth {

/// A complex on vertices {0, ..., n-1}. The void complex has no faces at
/// all; the empty complex {∅} has the single facet 0.
class SimplicialComplex {
 public:
  static SimplicialComplex void_complex(std::size_t vertex_count);
  /// Keeps the inclusion-maximal sets of `faces` as facets.
  static SimplicialComplex from_faces(std::size_t vertex_count, std::vector<VertexSet> faces);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  /// Sorted with vertex_set_less.
  const std::vector<VertexSet>& facets() const noexcept { return facets_; }
  bool is_void() const noexcept { return facets_.empty(); }
  bool contains_face(VertexSet face) const;
  /// Largest facet size minus one; -1 for {∅}. Throws for the void complex.
  int dimension() const;
  /// Every face, sorted with vertex_set_less (the empty face first).
  std::vector<VertexSet> faces() const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  SimplicialComplex(std::size_t n, std::vector<VertexSet> facets)
      : vertex_count_(n), facets_(std::move(facets)) {}

  std::size_t vertex_count_;
  std::vector<VertexSet> facets_;
};

/// Faces are the F whose squarefree monomial is outside I. Requires a
/// squarefree ideal ("polarize first" otherwise) on at most 64 variables.
SimplicialComplex stanley_reisner(const MonomialIdeal& ideal);

SimplicialComplex induced_subcomplex(const SimplicialComplex& complex, VertexSet subset);

/// dim H̃_d(Δ; field) for d >= -1, nonzero entries only. H̃_{-1}({∅}) has
/// dimension 1; the void complex has no homology.
std::map<int, std::uint64_t> reduced_homology_dims(const SimplicialComplex& complex, FieldSpec field);

/// Same computation on an explicit downward-closed face list.
std::map<int, std::uint64_t> reduced_homology_of_faces(const std::vector<VertexSet>& faces,
                                                       FieldSpec field);

}  // namespace pathdepth
