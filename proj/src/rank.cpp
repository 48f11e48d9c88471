#include "pathdepth/rank.hpp"

#include <bit>
#include <gmpxx.h>

#include "pathdepth/error.hpp"
#include "pathdepth/kernels.hpp"

namespace pathdepth {
namespace {

std::size_t rank_gf2(const SparseMatrix& m) {
  const std::size_t words = (m.rows + 63) / 64;
  if (words == 0) return 0;
  std::vector<std::uint64_t> basis;                       // pivot vectors, flat
  std::vector<std::int64_t> pivot_at(m.rows, -1);         // bit -> basis slot
  std::vector<std::uint64_t> v(words);
  std::size_t rank = 0;
  for (const auto& column : m.columns) {
    std::fill(v.begin(), v.end(), 0);
    for (const auto& e : column) {
      if (e.value & 1) v[e.row / 64] ^= std::uint64_t{1} << (e.row % 64);
    }
    std::size_t w = 0;
    while (true) {
      while (w < words && v[w] == 0) ++w;
      if (w == words) break;
      const std::size_t bit = w * 64 + static_cast<std::size_t>(std::countr_zero(v[w]));
      const auto slot = pivot_at[bit];
      if (slot < 0) {
        pivot_at[bit] = static_cast<std::int64_t>(rank);
        basis.insert(basis.end(), v.begin(), v.end());
        ++rank;
        break;
      }
      // pivot has no bits below `bit`, so words before w stay zero
      kernels::xor_into(std::span(v).subspan(w),
                        std::span<const std::uint64_t>(basis).subspan(static_cast<std::size_t>(slot) * words + w, words - w));
    }
  }
  return rank;
}

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    const auto q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

std::size_t rank_gfp(const SparseMatrix& m, std::uint32_t p) {
  const std::size_t n = m.rows;
  if (n == 0) return 0;
  std::vector<std::uint32_t> basis;
  std::vector<std::int64_t> pivot_at(n, -1);
  std::vector<std::uint32_t> v(n);
  std::size_t rank = 0;
  for (const auto& column : m.columns) {
    std::fill(v.begin(), v.end(), 0);
    for (const auto& e : column) {
      const auto r = static_cast<std::int64_t>(e.value) % static_cast<std::int64_t>(p);
      v[e.row] = static_cast<std::uint32_t>((v[e.row] + static_cast<std::uint64_t>(r < 0 ? r + p : r)) % p);
    }
    std::size_t lead = 0;
    while (true) {
      while (lead < n && v[lead] == 0) ++lead;
      if (lead == n) break;
      const auto slot = pivot_at[lead];
      if (slot < 0) {
        // normalize to a leading 1
        const auto inv = mod_inverse(v[lead], p);
        for (std::size_t i = lead; i < n; ++i) {
          v[i] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(v[i]) * inv % p);
        }
        pivot_at[lead] = static_cast<std::int64_t>(rank);
        basis.insert(basis.end(), v.begin(), v.end());
        ++rank;
        break;
      }
      const std::uint32_t factor = p - v[lead];
      kernels::axpy_mod(std::span(v).subspan(lead),
                        std::span<const std::uint32_t>(basis).subspan(static_cast<std::size_t>(slot) * n + lead, n - lead),
                        factor, p);
    }
  }
  return rank;
}

// Bareiss fraction-free elimination; every intermediate value is a minor.
std::size_t rank_rationals(const SparseMatrix& m) {
  const std::size_t rows = m.cols();  // one row per column vector
  const std::size_t cols = m.rows;
  if (rows == 0 || cols == 0) return 0;
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    for (const auto& e : m.columns[r]) a[r][e.row] += e.value;
  }
  mpz_class previous = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class value = a[rank][c] * a[i][j] - a[i][c] * a[rank][j];
        mpz_divexact(value.get_mpz_t(), value.get_mpz_t(), previous.get_mpz_t());
        a[i][j] = std::move(value);
      }
      a[i][c] = 0;
    }
    previous = a[rank][c];
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t matrix_rank(const SparseMatrix& matrix, FieldSpec field) {
  for (const auto& column : matrix.columns) {
    for (const auto& e : column) {
      if (e.row >= matrix.rows) throw Error("sparse matrix entry outside its row range");
    }
  }
  if (field.is_rationals()) return rank_rationals(matrix);
  if (field.characteristic() == 2) return rank_gf2(matrix);
  return rank_gfp(matrix, field.characteristic());
}

}  // namespace pathdepth
