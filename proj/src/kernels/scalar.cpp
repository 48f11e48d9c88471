#include "pathdepth/kernels.hpp"

namespace pathdepth::kernels::detail {

void xor_into_scalar(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) dst[i] ^= src[i];
}

void axpy_mod_scalar(std::uint32_t* dst, const std::uint32_t* src, std::size_t len,
                     std::uint32_t factor, std::uint32_t p) {
  const std::uint64_t f = factor;
  for (std::size_t i = 0; i < len; ++i) {
    dst[i] = static_cast<std::uint32_t>((dst[i] + f * src[i]) % p);
  }
}

bool divides_scalar(const std::uint32_t* a, const std::uint32_t* b, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

}  // namespace pathdepth::kernels::detail
