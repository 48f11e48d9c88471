#include "pathdepth/field.hpp"

#include <charconv>

#include "pathdepth/error.hpp"

namespace pathdepth {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (!is_prime(p)) throw Error("field characteristic " + std::to_string(p) + " is not prime");
  return FieldSpec(p);
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "Q" || text == "QQ" || text == "0") return rationals();
  std::string_view digits = text;
  if (digits.starts_with("GF(") && digits.ends_with(")")) {
    digits = digits.substr(3, digits.size() - 4);
  }
  std::uint32_t p = 0;
  const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
  if (ec != std::errc{} || end != digits.data() + digits.size()) {
    throw Error("unknown field '" + std::string(text) + "' (use a prime such as 2, 3, 5, or Q)");
  }
  return prime(p);
}

std::string FieldSpec::name() const {
  return is_rationals() ? "QQ" : "GF(" + std::to_string(characteristic_) + ")";
}

}  // namespace pathdepth
