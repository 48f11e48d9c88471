#pragma once

// Simple graphs, graph powers, t-paths and the ideals built from them.
// Vertices are 1-based in every public signature.

#include <cstddef>
#include <utility>
#include <vector>

#include <json.hpp>

#include "pathdepth/error.hpp"
#include "pathdepth/monomial.hpp"

namespace pathdepth {

using Edge = std::pair<std::size_t, std::size_t>;

class SimpleGraph {
 public:
  /// Edges are normalized to i < j and sorted; loops, duplicates and
  /// out-of-range endpoints throw.
  SimpleGraph(std::size_t num_vertices, std::vector<Edge> edges);

  std::size_t num_vertices() const noexcept { return num_vertices_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  bool adjacent(std::size_t i, std::size_t j) const;
  const std::vector<std::size_t>& neighbors(std::size_t v) const;

  /// Breadth-first distances from `source`; unreachable vertices get 0 and
  /// index 0 is unused.
  std::vector<std::size_t> distances_from(std::size_t source) const;

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
    return a.num_vertices_ == b.num_vertices_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t num_vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> adjacency_;  // index 0 unused
};

SimpleGraph path_graph(std::size_t n);

/// Same vertices; {i, j} is an edge iff 1 <= dist_G(i, j) <= k.
SimpleGraph graph_power(const SimpleGraph& graph, std::size_t k);

struct TPath {
  std::vector<std::size_t> vertices;  // 1-based, lexicographically <= its reversal
  Monomial monomial;
};

/// All paths on t distinct vertices, one representative per reversal pair,
/// in lexicographic order of the vertex sequence.
std::vector<TPath> enumerate_t_paths(const SimpleGraph& graph, std::size_t t,
                                     const Limits& limits = {});

/// I_t(G); paths on the same vertex set give one generator.
MonomialIdeal path_ideal(const SimpleGraph& graph, std::size_t t, const Limits& limits = {});

MonomialIdeal edge_ideal(const SimpleGraph& graph);

nlohmann::json graph_to_json(const SimpleGraph& graph);
SimpleGraph graph_from_json(const nlohmann::json& j);

}  // namespace pathdepth
