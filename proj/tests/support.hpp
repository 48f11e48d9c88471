#pragma once

// Small builders shared by the test files.

#include <random>
#include <vector>

#include "pathdepth/ideal_io.hpp"
#include "pathdepth/monomial.hpp"

namespace testing {

inline pathdepth::MonomialIdeal ideal(const char* text, std::size_t vars) {
  return pathdepth::parse_ideal(text, vars);
}

inline pathdepth::Monomial mono(std::vector<pathdepth::Exponent> e) { return pathdepth::Monomial(std::move(e)); }

/// Random ideal with 1..max_gens generators, exponents in 0..max_exp, never
/// containing the unit.
inline pathdepth::MonomialIdeal random_ideal(std::mt19937& rng, std::size_t n, std::size_t max_gens,
                                             unsigned max_exp) {
  std::uniform_int_distribution<std::size_t> count(1, max_gens);
  std::uniform_int_distribution<unsigned> exponent(0, max_exp);
  std::vector<pathdepth::Monomial> gens;
  const auto target = count(rng);
  while (gens.size() < target) {
    std::vector<pathdepth::Exponent> e(n);
    for (auto& v : e) v = exponent(rng);
    pathdepth::Monomial m(std::move(e));
    if (!m.is_unit()) gens.push_back(std::move(m));
  }
  return pathdepth::minimalize(std::move(gens), pathdepth::RingContext(n));
}

inline pathdepth::MonomialIdeal random_squarefree(std::mt19937& rng, std::size_t n, std::size_t max_gens) {
  return random_ideal(rng, n, max_gens, 1);
}

/// Every monomial in n variables with exponents bounded by max_exp.
inline std::vector<pathdepth::Monomial> box(std::size_t n, unsigned max_exp) {
  std::vector<pathdepth::Monomial> out;
  std::vector<pathdepth::Exponent> e(n, 0);
  while (true) {
    out.emplace_back(e);
    std::size_t i = 0;
    while (i < n && e[i] == max_exp) e[i++] = 0;
    if (i == n) break;
    ++e[i];
  }
  return out;
}

/// Membership by scanning generators, without the library's early exits.
inline bool brute_contains(const pathdepth::MonomialIdeal& ideal, const pathdepth::Monomial& u) {
  for (const auto& g : ideal.generators()) {
    bool ok = true;
    for (std::size_t i = 0; i < u.num_vars(); ++i) ok = ok && g[i] <= u[i];
    if (ok) return true;
  }
  return false;
}

}  // namespace testing
