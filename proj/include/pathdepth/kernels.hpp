#pragma once

// Inner-loop kernels for exact elimination and divisibility tests.
//
// Every kernel has a portable scalar reference and, on x86-64, an AVX2
// variant. The variant is chosen once at startup from the CPU features and
// may be overridden with PATHDEPTH_KERNELS=scalar|avx2 or select().

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace pathdepth::kernels {

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa);

struct KernelTable {
  Isa isa;
  /// dst[i] ^= src[i]
  void (*xor_into)(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);
  /// dst[i] = (dst[i] + factor * src[i]) mod p, all operands already reduced.
  void (*axpy_mod)(std::uint32_t* dst, const std::uint32_t* src, std::size_t len,
                   std::uint32_t factor, std::uint32_t p);
  /// true iff a[i] <= b[i] for every i
  bool (*divides)(const std::uint32_t* a, const std::uint32_t* b, std::size_t len);
};

const KernelTable& scalar_table();
/// nullptr when the AVX2 variant was not compiled in.
const KernelTable* avx2_table();

bool avx2_supported();

/// The table used by the span wrappers below.
const KernelTable& active();

/// Force a variant. Throws pathdepth::Error if it is unavailable on this CPU.
void select(Isa isa);

inline void xor_into(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
  active().xor_into(dst.data(), src.data(), dst.size());
}

inline void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src,
                     std::uint32_t factor, std::uint32_t p) {
  active().axpy_mod(dst.data(), src.data(), dst.size(), factor, p);
}

inline bool divides(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) {
  return active().divides(a.data(), b.data(), a.size());
}

namespace detail {
void xor_into_scalar(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);
void axpy_mod_scalar(std::uint32_t* dst, const std::uint32_t* src, std::size_t len,
                     std::uint32_t factor, std::uint32_t p);
bool divides_scalar(const std::uint32_t* a, const std::uint32_t* b, std::size_t len);
}  // namespace detail

}  // namespace pathdepth::kernels
