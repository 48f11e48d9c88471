#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace pathdepth {

/// Subset of {0, ..., 63} stored as a bit mask. Vertex i is bit i; the
/// 1-based label shown to users is i + 1.
using VertexSet = std::uint64_t;

inline constexpr std::size_t kMaxVertices = 64;

inline int cardinality(VertexSet s) { return std::popcount(s); }

inline bool is_subset(VertexSet a, VertexSet b) { return (a & ~b) == 0; }

inline VertexSet full_set(std::size_t n) {
  return n >= 64 ? ~VertexSet{0} : ((VertexSet{1} << n) - 1);
}

/// Order by cardinality, then lexicographically on the sorted element lists.
inline bool vertex_set_less(VertexSet a, VertexSet b) {
  const int ca = cardinality(a), cb = cardinality(b);
  if (ca != cb) return ca < cb;
  if (a == b) return false;
  // the smallest element of the symmetric difference decides
  const VertexSet low = (a ^ b) & (~(a ^ b) + 1);
  return (a & low) != 0;
}

inline std::vector<std::size_t> elements(VertexSet s) {
  std::vector<std::size_t> out;
  out.reserve(cardinality(s));
  while (s) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(s)));
    s &= s - 1;
  }
  return out;
}

/// 1-based labels, e.g. {1,3,4}.
inline std::string format_vertex_set(VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (auto v : elements(s)) {
    if (!first) out += ",";
    out += std::to_string(v + 1);
    first = false;
  }
  return out + "}";
}

}  // namespace pathdepth
