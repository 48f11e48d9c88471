#pragma once

#include <cstddef>
#include <vector>

#include "pathdepth/vertex_set.hpp"

namespace pathdepth {

/// All inclusion-minimal vertex sets meeting every edge of the hypergraph,
/// sorted with vertex_set_less. An empty edge list gives {∅}; an empty edge
/// inside the list gives no transversal at all.
std::vector<VertexSet> minimal_transversals(const std::vector<VertexSet>& edges);

}  // namespace pathdepth
