#pragma once

// Exact rank of sparse integer matrices over a chosen field.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "pathdepth/field.hpp"

namespace pathdepth {

struct SparseEntry {
  std::uint32_t row;
  std::int32_t value;
};

/// Column-major sparse integer matrix; columns hold (row, value) pairs.
struct SparseMatrix {
  std::size_t rows = 0;
  std::vector<std::vector<SparseEntry>> columns;

  std::size_t cols() const noexcept { return columns.size(); }
};

/// Rank over GF(p) (bit-packed for p = 2) or over Q (fraction-free
/// elimination on arbitrary-precision integers).
std::size_t matrix_rank(const SparseMatrix& matrix, FieldSpec field);

}  // namespace pathdepth
