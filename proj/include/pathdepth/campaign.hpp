#pragma once

// Verification campaign: every closed form and identity for I_3(P_n^2)
// compared against values computed from scratch by the engines, plus seeded
// property trials for the depth lemmas used along the way.
//
// Claim ids: thm2.4, thm2.4.branch, cor2.5, prop2.6, prop2.6.facet, thm2.7,
// prop2.8.1, prop2.8.2, prop2.8.2.symbolic, prop2.8.2.socle-w, prop2.8.3,
// prop2.8.3.witness, lemma2.1.i, lemma2.1.ii, lemma2.2, lemma2.3,
// identity:*, charstab.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "pathdepth/betti.hpp"
#include "pathdepth/field.hpp"
#include "pathdepth/monomial.hpp"
#include "pathdepth/report.hpp"

namespace pathdepth {

struct CampaignConfig {
  long n_min = 3;
  long n_max = 10;
  long t_max = 3;
  FieldSpec field = FieldSpec::prime(2);
  std::uint64_t seed = 1;
  /// Claim selectors; empty runs everything. "prop2.8" selects prop2.8.1,
  /// prop2.8.2.symbolic and so on; "identity" selects every identity.
  std::vector<std::string> claims;

  std::size_t lemma21_trials = 200;
  std::size_t lemma22_trials = 100;
  long lemma23_limit = 100'000;
  long charstab_n_max = 10;
  long facet_check_n_max = 13;
  /// powers whose polarization needs more variables fall back to the socle test
  std::size_t polarized_var_limit = 12;
  /// prop2.8.3 runs for 5 <= n <= power_n_max; I^{t0} grows past 10^5 generators beyond 11
  long power_n_max = 11;
  HochsterOptions hochster;
};

/// Whether `id` is picked by `selector` (equal, or selector followed by '.' or ':').
bool claim_selected(const std::string& id, const std::vector<std::string>& selectors);

struct Lemma21Trial {
  MonomialIdeal ideal;
  Monomial f;  // squarefree, not in ideal
};

struct Lemma22Trial {
  MonomialIdeal left;   // k[x1..xs]
  MonomialIdeal right;  // k[y1..yt], s + t <= 8
};

/// Random squarefree ideal: every squarefree monomial of degree 2 or 3 on
/// num_vars variables is kept with probability 0.3, then minimalized.
MonomialIdeal random_squarefree_ideal(std::mt19937_64& engine, std::size_t num_vars);

std::vector<Lemma21Trial> lemma21_trials(std::uint64_t seed, std::size_t count);
std::vector<Lemma22Trial> lemma22_trials(std::uint64_t seed, std::size_t count);

/// Individual check errors are recorded as failing checks, never thrown.
VerificationReport run_campaign(const CampaignConfig& config);

}  // namespace pathdepth
