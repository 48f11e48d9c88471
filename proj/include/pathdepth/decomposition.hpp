#pragma once

// Minimal primes, height and Krull dimension, symbolic powers, the
// associated-maximal-ideal (socle) test and Cohen-Macaulayness.

#include <cstddef>
#include <optional>
#include <vector>

#include <json.hpp>

#include "pathdepth/betti.hpp"
#include "pathdepth/field.hpp"
#include "pathdepth/monomial.hpp"
#include "pathdepth/vertex_set.hpp"

namespace pathdepth {

/// The monomial prime (x_i : i in variables); never empty.
class VariablePrime {
 public:
  explicit VariablePrime(VertexSet variables);

  VertexSet variables() const noexcept { return variables_; }
  std::size_t height() const noexcept { return static_cast<std::size_t>(cardinality(variables_)); }
  MonomialIdeal ideal(const RingContext& ring) const;

  friend bool operator==(const VariablePrime&, const VariablePrime&) = default;

 private:
  VertexSet variables_;
};

/// Minimal transversals of the generator supports, sorted by size and then
/// lexicographically. The zero ideal has none.
std::vector<VariablePrime> minimal_primes(const MonomialIdeal& ideal);

struct HeightAndDim {
  std::size_t height;
  std::size_t dim;
};

/// height = smallest minimal prime; dim = n - height; zero ideal -> (0, n).
HeightAndDim height_and_dim(const MonomialIdeal& ideal);

/// I = ∩ P over every minimal prime P (squarefree I is radical).
std::vector<VariablePrime> primary_decomposition(const MonomialIdeal& ideal);

/// Lcm-intersection of the given primes; the zero ideal for an empty list.
MonomialIdeal intersect_primes(const std::vector<VariablePrime>& primes, const RingContext& ring,
                               const Limits& limits = {});

/// I^(t) = ∩ P^t over the minimal primes of squarefree I.
MonomialIdeal symbolic_power(const MonomialIdeal& ideal, std::size_t t, const Limits& limits = {});

struct MaxIdealAssociation {
  bool associated = false;
  /// lexicographically least socle generator when associated
  std::optional<Monomial> witness;
};

/// Whether m = (x1..xn) is associated to S/I, i.e. (I : m) != I, which is
/// the same as depth S/I = 0.
MaxIdealAssociation max_ideal_is_associated(const MonomialIdeal& ideal);

/// depth == dim; the zero ideal counts as Cohen-Macaulay.
bool is_cohen_macaulay(const MonomialIdeal& ideal, FieldSpec field, const HochsterOptions& options = {});

/// {"primes": [[i, ...], ...], "height": h, "dim": d}, 1-based variables.
nlohmann::json decomposition_to_json(const std::vector<VariablePrime>& primes, const HeightAndDim& hd);

}  // namespace pathdepth
