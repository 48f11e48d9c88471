// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.
#include <immintrin.h>

#include "pathdepth/kernels.hpp"

namespace pathdepth::kernels {
namespace {

void xor_into_avx2(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    const __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(d, s));
  }
  for (; i < words; ++i) dst[i] ^= src[i];
}

// Largest modulus for which dst + factor * src stays below 2^31.
constexpr std::uint32_t kAvxModulusLimit = 46340;

// r = x mod p for 4 lanes of nonnegative int32 x < 2^31, via a double
// quotient estimate corrected by one step either way.
inline __m128i reduce4(__m128i x, __m256d pd, __m256d inv_p, __m128i p) {
  const __m256d xd = _mm256_cvtepi32_pd(x);
  const __m256d q = _mm256_floor_pd(_mm256_mul_pd(xd, inv_p));
  const __m256d r = _mm256_fnmadd_pd(q, pd, xd);
  __m128i ri = _mm256_cvttpd_epi32(r);
  const __m128i neg = _mm_cmpgt_epi32(_mm_setzero_si128(), ri);
  ri = _mm_add_epi32(ri, _mm_and_si128(neg, p));
  const __m128i over = _mm_cmpgt_epi32(ri, _mm_sub_epi32(p, _mm_set1_epi32(1)));
  return _mm_sub_epi32(ri, _mm_and_si128(over, p));
}

void axpy_mod_avx2_impl(std::uint32_t* dst, const std::uint32_t* src, std::size_t len,
                        std::uint32_t factor, std::uint32_t p) {
  const __m256i f = _mm256_set1_epi32(static_cast<int>(factor));
  const __m256d pd = _mm256_set1_pd(static_cast<double>(p));
  const __m256d inv_p = _mm256_set1_pd(1.0 / static_cast<double>(p));
  const __m128i p4 = _mm_set1_epi32(static_cast<int>(p));
  std::size_t i = 0;
  for (; i + 8 <= len; i += 8) {
    const __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    const __m256i x = _mm256_add_epi32(d, _mm256_mullo_epi32(s, f));
    const __m128i lo = reduce4(_mm256_castsi256_si128(x), pd, inv_p, p4);
    const __m128i hi = reduce4(_mm256_extracti128_si256(x, 1), pd, inv_p, p4);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_set_m128i(hi, lo));
  }
  if (i < len) detail::axpy_mod_scalar(dst + i, src + i, len - i, factor, p);
}

void axpy_mod_avx2(std::uint32_t* dst, const std::uint32_t* src, std::size_t len,
                   std::uint32_t factor, std::uint32_t p) {
  if (p > kAvxModulusLimit) {
    detail::axpy_mod_scalar(dst, src, len, factor, p);
    return;
  }
  axpy_mod_avx2_impl(dst, src, len, factor, p);
}

bool divides_avx2(const std::uint32_t* a, const std::uint32_t* b, std::size_t len) {
  std::size_t i = 0;
  for (; i + 8 <= len; i += 8) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    // exponents are far below 2^31, so the signed compare is exact
    if (!_mm256_testz_si256(_mm256_cmpgt_epi32(va, vb), _mm256_cmpgt_epi32(va, vb))) {
      return false;
    }
  }
  for (; i < len; ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

const KernelTable kAvx2Table{Isa::avx2, &xor_into_avx2, &axpy_mod_avx2, &divides_avx2};

}  // namespace

const KernelTable* avx2_table() { return &kAvx2Table; }

}  // namespace pathdepth::kernels
