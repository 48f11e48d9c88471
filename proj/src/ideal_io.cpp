#include "pathdepth/ideal_io.hpp"

#include <cctype>
#include <limits>
#include <vector>

namespace pathdepth {

ParseError::ParseError(std::size_t position, const std::string& what)
    : Error("parse error at position " + std::to_string(position) + ": " + what),
      position_(position) {}

namespace {

class IdealParser {
 public:
  explicit IdealParser(std::string_view text) : text_(text) {}

  // Each generator as (index -> exponent) pairs; indices 1-based.
  std::vector<std::vector<std::pair<std::size_t, Exponent>>> run(bool& is_zero) {
    std::vector<std::vector<std::pair<std::size_t, Exponent>>> gens;
    skip_space();
    if (at_end()) throw ParseError(pos_, "empty ideal text (write 0 for the zero ideal)");
    if (peek() == '0') {
      ++pos_;
      skip_space();
      if (!at_end()) throw ParseError(pos_, "unexpected text after 0");
      is_zero = true;
      return gens;
    }
    is_zero = false;
    while (true) {
      gens.push_back(generator());
      skip_space();
      if (at_end()) break;
      expect(',');
    }
    return gens;
  }

  std::size_t position() const { return pos_; }

 private:
  std::vector<std::pair<std::size_t, Exponent>> generator() {
    std::vector<std::pair<std::size_t, Exponent>> factors;
    while (true) {
      skip_space();
      factors.push_back(factor());
      skip_space();
      if (at_end() || peek() != '*') break;
      ++pos_;
    }
    return factors;
  }

  std::pair<std::size_t, Exponent> factor() {
    expect('x');
    skip_space();
    const std::size_t index_pos = pos_;
    const auto index = number("variable index");
    if (index == 0) throw ParseError(index_pos, "variable indices are 1-based");
    skip_space();
    Exponent exponent = 1;
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_space();
      const auto e = number("exponent");
      if (e > std::numeric_limits<Exponent>::max() / 2) throw ParseError(pos_, "exponent too large");
      exponent = static_cast<Exponent>(e);
    }
    return {static_cast<std::size_t>(index), exponent};
  }

  std::uint64_t number(const char* what) {
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
      throw ParseError(pos_, std::string("expected ") + what);
    }
    std::uint64_t value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + static_cast<std::uint64_t>(peek() - '0');
      if (value > 1'000'000'000) throw ParseError(pos_, std::string(what) + " too large");
      ++pos_;
    }
    return value;
  }

  void expect(char c) {
    skip_space();
    if (at_end()) throw ParseError(pos_, std::string("expected '") + c + "', found end of text");
    if (peek() != c) {
      throw ParseError(pos_, std::string("expected '") + c + "', found '" + peek() + "'");
    }
    ++pos_;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

MonomialIdeal parse_ideal(std::string_view text, std::optional<std::size_t> num_vars) {
  IdealParser parser(text);
  bool is_zero = false;
  const auto raw = parser.run(is_zero);
  std::size_t max_index = 0;
  for (const auto& gen : raw) {
    for (const auto& [index, exponent] : gen) max_index = std::max(max_index, index);
  }
  if (num_vars && *num_vars < max_index) {
    throw Error("ideal uses x" + std::to_string(max_index) + " but the ring has only " +
                std::to_string(*num_vars) + " variables");
  }
  const std::size_t n = num_vars.value_or(max_index);
  if (n == 0) throw Error("cannot infer the number of variables of the zero ideal; pass it explicitly");
  const RingContext ring(n);
  if (is_zero) return MonomialIdeal::zero(ring);

  std::vector<Monomial> gens;
  for (const auto& gen : raw) {
    std::vector<Exponent> e(n, 0);
    for (const auto& [index, exponent] : gen) e[index - 1] += exponent;
    gens.emplace_back(std::move(e));
  }
  return minimalize(std::move(gens), ring);
}

std::string format_ideal(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return "0";
  std::string out;
  for (const auto& g : ideal.generators()) {
    if (!out.empty()) out += ", ";
    out += g.to_string();
  }
  return out;
}

nlohmann::json ideal_to_json(const MonomialIdeal& ideal) {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : ideal.generators()) {
    gens.push_back(std::vector<Exponent>(g.exponents().begin(), g.exponents().end()));
  }
  return {{"num_vars", ideal.num_vars()}, {"generators", std::move(gens)}};
}

MonomialIdeal ideal_from_json(const nlohmann::json& j) {
  try {
    const auto n = j.at("num_vars").get<std::size_t>();
    const RingContext ring(n);
    std::vector<Monomial> gens;
    for (const auto& row : j.at("generators")) {
      auto e = row.get<std::vector<Exponent>>();
      if (e.size() != n) throw Error("generator has " + std::to_string(e.size()) + " exponents, expected " + std::to_string(n));
      gens.emplace_back(std::move(e));
    }
    return minimalize(std::move(gens), ring);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed ideal JSON: ") + e.what());
  }
}

}  // namespace pathdepth
