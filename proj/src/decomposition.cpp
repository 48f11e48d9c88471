#include "pathdepth/decomposition.hpp"

#include <algorithm>

#include "pathdepth/transversal.hpp"

namespace pathdepth {

VariablePrime::VariablePrime(VertexSet variables) : variables_(variables) {
  if (variables == 0) throw Error("a variable prime needs at least one variable");
}

MonomialIdeal VariablePrime::ideal(const RingContext& ring) const {
  if (!is_subset(variables_, full_set(ring.num_vars()))) throw Error("prime uses a variable outside the ring");
  std::vector<Monomial> gens;
  for (auto v : elements(variables_)) gens.push_back(Monomial::variable(ring.num_vars(), v));
  return minimalize(std::move(gens), ring);
}

namespace {

void require_squarefree(const MonomialIdeal& ideal, const char* what) {
  if (!ideal.is_squarefree()) throw Error(std::string(what) + " needs a squarefree ideal");
  if (ideal.num_vars() > kMaxVertices) throw Error(std::string(what) + " supports at most 64 variables");
}

}  // namespace

std::vector<VariablePrime> minimal_primes(const MonomialIdeal& ideal) {
  require_squarefree(ideal, "minimal_primes");
  if (ideal.is_zero()) return {};
  std::vector<VertexSet> supports;
  for (const auto& g : ideal.generators()) supports.push_back(g.support());
  std::vector<VariablePrime> out;
  for (auto t : minimal_transversals(supports)) out.emplace_back(t);
  return out;
}

HeightAndDim height_and_dim(const MonomialIdeal& ideal) {
  const auto n = ideal.num_vars();
  const auto primes = minimal_primes(ideal);
  if (primes.empty()) return {0, n};
  std::size_t height = n;
  for (const auto& p : primes) height = std::min(height, p.height());
  return {height, n - height};
}

std::vector<VariablePrime> primary_decomposition(const MonomialIdeal& ideal) {
  return minimal_primes(ideal);
}

MonomialIdeal intersect_primes(const std::vector<VariablePrime>& primes, const RingContext& ring,
                               const Limits& limits) {
  if (primes.empty()) return MonomialIdeal::zero(ring);
  auto acc = primes.front().ideal(ring);
  for (std::size_t k = 1; k < primes.size(); ++k) {
    acc = ideal_intersection(acc, primes[k].ideal(ring), limits);
  }
  return acc;
}

MonomialIdeal symbolic_power(const MonomialIdeal& ideal, std::size_t t, const Limits& limits) {
  require_squarefree(ideal, "symbolic_power");
  if (t == 0) throw Error("power exponent must be positive");
  const auto primes = minimal_primes(ideal);
  if (primes.empty()) return ideal;
  std::optional<MonomialIdeal> acc;
  for (const auto& p : primes) {
    auto power = ideal_power(p.ideal(ideal.ring()), t, limits);
    acc = acc ? ideal_intersection(*acc, power, limits) : std::move(power);
  }
  return *acc;
}

MaxIdealAssociation max_ideal_is_associated(const MonomialIdeal& ideal) {
  auto socle = socle_generators(ideal);
  if (socle.empty()) return {};
  const auto least = std::min_element(socle.begin(), socle.end());
  return {true, *least};
}

bool is_cohen_macaulay(const MonomialIdeal& ideal, FieldSpec field, const HochsterOptions& options) {
  require_squarefree(ideal, "is_cohen_macaulay");
  if (ideal.is_zero()) return true;
  return depth_squarefree(ideal, field, options) == height_and_dim(ideal).dim;
}

nlohmann::json decomposition_to_json(const std::vector<VariablePrime>& primes, const HeightAndDim& hd) {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& p : primes) {
    std::vector<std::size_t> vars;
    for (auto v : elements(p.variables())) vars.push_back(v + 1);
    list.push_back(vars);
  }
  return {{"primes", std::move(list)}, {"height", hd.height}, {"dim", hd.dim}};
}

}  // namespace pathdepth
