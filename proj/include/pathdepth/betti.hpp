#pragma once

// Multigraded Betti numbers of S/I for squarefree I via Hochster's formula
//
//   beta_{i,W}(S/I) = dim H̃_{|W|-i-1}(Δ_W)
//
// and the invariants read off the table: projective dimension and depth
// (Auslander-Buchsbaum). Non-squarefree ideals go through polarization.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include <json.hpp>

#include "pathdepth/error.hpp"
#include "pathdepth/field.hpp"
#include "pathdepth/monomial.hpp"
#include "pathdepth/vertex_set.hpp"

namespace pathdepth {

struct BettiKey {
  std::size_t i;
  VertexSet subset;
};

/// (|W|, W lexicographic, i)
struct BettiKeyLess {
  bool operator()(const BettiKey& a, const BettiKey& b) const {
    if (a.subset != b.subset) return vertex_set_less(a.subset, b.subset);
    return a.i < b.i;
  }
};

class BettiTable {
 public:
  using Entries = std::map<BettiKey, std::uint64_t, BettiKeyLess>;

  BettiTable(FieldSpec field, std::size_t num_vars) : field_(field), num_vars_(num_vars) {}

  FieldSpec field() const noexcept { return field_; }
  std::size_t num_vars() const noexcept { return num_vars_; }
  const Entries& entries() const noexcept { return entries_; }

  /// Zero values are not stored.
  void set(std::size_t i, VertexSet subset, std::uint64_t value);
  std::uint64_t at(std::size_t i, VertexSet subset) const;

  /// beta_i = sum over W of beta_{i,W}, for i = 0 .. projective_dimension()
  std::vector<std::uint64_t> totals() const;
  std::size_t projective_dimension() const;

 private:
  FieldSpec field_;
  std::size_t num_vars_;
  Entries entries_;
};

/// {"field": "GF(2)", "entries": [{"i": 1, "W": [1,2,3], "beta": 1}, ...]}
/// with 1-based vertices, sorted by (|W|, W, i).
nlohmann::json betti_to_json(const BettiTable& table);

struct HochsterOptions {
  Limits limits;
  /// worker threads for the subset sweep; 0 picks the hardware concurrency
  unsigned threads = 1;
  /// called from the sweeping threads with (subsets done, total)
  std::function<void(std::uint64_t, std::uint64_t)> progress;
};

/// Full table over all W ⊆ [n]. Subsets W on which Δ_W is a cone are
/// skipped: some vertex of W lies in no generator support inside W.
BettiTable hochster_betti(const MonomialIdeal& ideal, FieldSpec field, const HochsterOptions& options = {});

/// beta_{i,W}(S/I) for one subset, as i -> value (nonzero only). Not capped.
std::map<std::size_t, std::uint64_t> betti_at_subset(const MonomialIdeal& ideal, VertexSet subset,
                                                     FieldSpec field);

std::size_t projective_dimension(const MonomialIdeal& ideal, FieldSpec field,
                                 const HochsterOptions& options = {});

/// n - pd(S/I) for squarefree I.
std::size_t depth_squarefree(const MonomialIdeal& ideal, FieldSpec field,
                             const HochsterOptions& options = {});

/// n - pd(S'/polarize(I)); polarization keeps the projective dimension.
std::size_t depth_general(const MonomialIdeal& ideal, FieldSpec field,
                          const HochsterOptions& options = {});

}  // namespace pathdepth
