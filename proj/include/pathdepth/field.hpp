#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace pathdepth {

/// Coefficient field for homology: GF(p) for a prime p, or the rationals.
class FieldSpec {
 public:
  static FieldSpec prime(std::uint32_t p);
  static FieldSpec rationals() { return FieldSpec(0); }

  /// Accepts "2", "3", "GF(5)", "Q", "QQ".
  static FieldSpec parse(std::string_view text);

  /// 0 for the rationals.
  std::uint32_t characteristic() const noexcept { return characteristic_; }
  bool is_rationals() const noexcept { return characteristic_ == 0; }

  /// "GF(2)", "QQ"
  std::string name() const;

  friend bool operator==(FieldSpec, FieldSpec) = default;

 private:
  explicit FieldSpec(std::uint32_t characteristic) : characteristic_(characteristic) {}
  std::uint32_t characteristic_;
};

bool is_prime(std::uint32_t p);

}  // namespace pathdepth
