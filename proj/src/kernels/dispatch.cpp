#include <atomic>
#include <cstdlib>
#include <string>

#include "pathdepth/error.hpp"
#include "pathdepth/kernels.hpp"

namespace pathdepth::kernels {

#ifndef PATHDEPTH_HAVE_AVX2
const KernelTable* avx2_table() { return nullptr; }
#endif

namespace {

const KernelTable kScalarTable{Isa::scalar, &detail::xor_into_scalar,
                               &detail::axpy_mod_scalar, &detail::divides_scalar};

const KernelTable* initial_table() {
  const char* forced = std::getenv("PATHDEPTH_KERNELS");
  if (forced != nullptr && std::string(forced) == "scalar") return &kScalarTable;
  if (avx2_supported()) return avx2_table();
  return &kScalarTable;
}

std::atomic<const KernelTable*>& current() {
  static std::atomic<const KernelTable*> table{initial_table()};
  return table;
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
  }
  return "unknown";
}

const KernelTable& scalar_table() { return kScalarTable; }

bool avx2_supported() {
#if defined(PATHDEPTH_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__))
  static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return supported && avx2_table() != nullptr;
#else
  return false;
#endif
}

const KernelTable& active() { return *current().load(std::memory_order_relaxed); }

void select(Isa isa) {
  if (isa == Isa::scalar) {
    current().store(&kScalarTable);
    return;
  }
  if (!avx2_supported()) throw Error("AVX2 kernels are not available on this machine");
  current().store(avx2_table());
}

}  // namespace pathdepth::kernels
