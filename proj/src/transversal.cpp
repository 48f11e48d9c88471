#include "pathdepth/transversal.hpp"

#include <algorithm>
#include <bit>

namespace pathdepth {
namespace {

// Branch on the vertices of an uncovered edge. Vertices rejected by an
// earlier sibling branch are excluded, so every set is produced once.
class TransversalSearch {
 public:
  explicit TransversalSearch(std::vector<VertexSet> edges) : edges_(std::move(edges)) {}

  std::vector<VertexSet> run() {
    branch(0, 0);
    std::sort(found_.begin(), found_.end(), vertex_set_less);
    return std::move(found_);
  }

 private:
  bool is_minimal(VertexSet cover) const {
    for (VertexSet rest = cover; rest; rest &= rest - 1) {
      const VertexSet v = rest & (~rest + 1);
      // v needs a private edge: one that meets the cover only in v
      const bool has_private = std::any_of(edges_.begin(), edges_.end(),
                                           [&](VertexSet e) { return (e & cover) == v; });
      if (!has_private) return false;
    }
    return true;
  }

  void branch(VertexSet cover, VertexSet excluded) {
    // an uncovered edge with the fewest available vertices
    const VertexSet* pick = nullptr;
    int best = 65;
    for (const auto& e : edges_) {
      if (e & cover) continue;
      const int options = std::popcount(e & ~excluded);
      if (options == 0) return;
      if (options < best) {
        best = options;
        pick = &e;
      }
    }
    if (pick == nullptr) {
      if (is_minimal(cover)) found_.push_back(cover);
      return;
    }
    VertexSet tried = 0;
    for (VertexSet rest = *pick & ~excluded; rest; rest &= rest - 1) {
      const VertexSet v = rest & (~rest + 1);
      const VertexSet next = cover | v;
      // adding v must not make an earlier cover vertex redundant
      if (is_minimal(next)) branch(next, excluded | tried);
      tried |= v;
    }
  }

  std::vector<VertexSet> edges_;
  std::vector<VertexSet> found_;
};

}  // namespace

std::vector<VertexSet> minimal_transversals(const std::vector<VertexSet>& edges) {
  return TransversalSearch(edges).run();
}

}  // namespace pathdepth
