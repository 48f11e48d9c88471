#pragma once

// Monomials and monomial ideals over k[x1, ..., xn].
//
// A MonomialIdeal always holds its canonical minimal generating set: no
// generator divides another, no duplicates, sorted by degree and then by
// exponent vector with x1 as the most significant variable. Two ideals are
// equal exactly when their generator lists are equal.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pathdepth/error.hpp"
#include "pathdepth/vertex_set.hpp"

namespace pathdepth {

using Exponent = std::uint32_t;

/// The polynomial ring k[x1, ..., xn]. Variables are identified by index;
/// label(i) is "x<i+1>".
class RingContext {
 public:
  explicit RingContext(std::size_t num_vars);

  std::size_t num_vars() const noexcept { return num_vars_; }
  std::string label(std::size_t index) const;

  friend bool operator==(const RingContext&, const RingContext&) = default;

 private:
  std::size_t num_vars_;
};

class Monomial {
 public:
  explicit Monomial(std::vector<Exponent> exponents);

  static Monomial unit(std::size_t num_vars);
  /// x_{index+1}
  static Monomial variable(std::size_t num_vars, std::size_t index);
  /// Squarefree monomial with the given support.
  static Monomial from_support(std::size_t num_vars, VertexSet support);

  std::size_t num_vars() const noexcept { return exponents_.size(); }
  std::span<const Exponent> exponents() const noexcept { return exponents_; }
  Exponent operator[](std::size_t index) const { return exponents_[index]; }

  std::uint64_t degree() const noexcept { return degree_; }
  bool is_unit() const noexcept { return degree_ == 0; }
  bool is_squarefree() const noexcept;
  Exponent max_exponent() const noexcept;
  /// Variables with a positive exponent. Requires num_vars() <= 64.
  VertexSet support() const;

  /// true iff this monomial divides other
  bool divides(const Monomial& other) const;

  /// "x1^2*x3"; the unit prints as "1".
  std::string to_string() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);
  /// a / gcd(a, b)
  friend Monomial quotient_by_gcd(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.exponents_ == b.exponents_;
  }
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    return a.exponents_ <=> b.exponents_;
  }

 private:
  std::vector<Exponent> exponents_;
  std::uint64_t degree_ = 0;
};

/// Canonical generator order: degree ascending, then exponent vectors in
/// decreasing lexicographic order (x1x2 before x1x3 before x2x3).
bool canonical_less(const Monomial& a, const Monomial& b);

class MonomialIdeal {
 public:
  static MonomialIdeal zero(RingContext ring);

  const RingContext& ring() const noexcept { return ring_; }
  std::size_t num_vars() const noexcept { return ring_.num_vars(); }
  std::span<const Monomial> generators() const noexcept { return generators_; }
  std::size_t size() const noexcept { return generators_.size(); }
  bool is_zero() const noexcept { return generators_.empty(); }
  bool is_squarefree() const noexcept;
  /// Largest exponent of variable `index` among the generators.
  Exponent max_exponent(std::size_t index) const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  friend MonomialIdeal minimalize(std::vector<Monomial> gens, const RingContext& ring);
  MonomialIdeal(RingContext ring, std::vector<Monomial> gens)
      : ring_(ring), generators_(std::move(gens)) {}

  RingContext ring_;
  std::vector<Monomial> generators_;
};

/// Canonical minimal generating set of the ideal generated by gens.
/// Throws on a unit generator ("unit ideal not supported") or a monomial
/// from a different ring.
MonomialIdeal minimalize(std::vector<Monomial> gens, const RingContext& ring);

bool contains(const MonomialIdeal& ideal, const Monomial& u);

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b);
/// (I, f)
MonomialIdeal ideal_sum(const MonomialIdeal& a, const Monomial& f);
MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b,
                            const Limits& limits = {});
/// I^t with the product set re-minimalized after every multiplication.
MonomialIdeal ideal_power(const MonomialIdeal& ideal, std::size_t t, const Limits& limits = {});
MonomialIdeal ideal_intersection(const MonomialIdeal& a, const MonomialIdeal& b,
                                 const Limits& limits = {});

/// (I : f). Throws when f is in I, since the result would be the unit ideal.
MonomialIdeal colon_by_monomial(const MonomialIdeal& ideal, const Monomial& f);

/// Minimal generators of (I : m) that are not in I, m = (x1, ..., xn),
/// sorted in canonical order. Empty iff m is not an associated prime of S/I;
/// just the monomial 1 when every variable lies in I.
std::vector<Monomial> socle_generators(const MonomialIdeal& ideal);

/// (I : m) = I + (socle generators).
MonomialIdeal colon_by_variables(const MonomialIdeal& ideal);

struct Polarization {
  MonomialIdeal ideal;
  std::size_t added_vars = 0;
  /// origin[k] = (i, j): polarized variable k stands for the j-th copy
  /// (1-based) of original variable i (0-based).
  std::vector<std::pair<std::size_t, Exponent>> origin;
};

/// Standard polarization. Variable x_i gets max(1, a_i) copies, a_i its
/// largest exponent among the generators, laid out in block order
/// x_{1,1}, ..., x_{1,a_1}, x_{2,1}, ... . Squarefree ideals map to
/// themselves.
Polarization polarize(const MonomialIdeal& ideal, const Limits& limits = {});

/// The same generators in a larger ring, variable i moved to i + offset.
MonomialIdeal embed(const MonomialIdeal& ideal, const RingContext& target, std::size_t offset);

}  // namespace pathdepth
