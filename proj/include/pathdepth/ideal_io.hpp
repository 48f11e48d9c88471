#pragma once

// Text and JSON forms of monomial ideals.
//
// Text grammar: generators separated by ','; a generator is factors joined
// by '*'; a factor is x<index> or x<index>^<exponent> with 1-based index.
// Whitespace is ignored and repeated factors multiply. The zero ideal is
// written "0".
//
// JSON: {"num_vars": n, "generators": [[e1, ..., en], ...]}

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "pathdepth/monomial.hpp"

namespace pathdepth {

/// Raised for malformed ideal text; position() is the 0-based offset.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// The ring size is the largest index seen unless num_vars is given, in
/// which case it must cover every index.
MonomialIdeal parse_ideal(std::string_view text, std::optional<std::size_t> num_vars = {});

/// "x1*x2*x3, x2*x3*x4"; the zero ideal prints as "0".
std::string format_ideal(const MonomialIdeal& ideal);

nlohmann::json ideal_to_json(const MonomialIdeal& ideal);
MonomialIdeal ideal_from_json(const nlohmann::json& j);

}  // namespace pathdepth
