#include "pathdepth/campaign.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "pathdepth/decomposition.hpp"
#include "pathdepth/formulas.hpp"
#include "pathdepth/ideal_io.hpp"
#include "pathdepth/simplicial.hpp"

namespace pathdepth {

bool claim_selected(const std::string& id, const std::vector<std::string>& selectors) {
  if (selectors.empty()) return true;
  return std::any_of(selectors.begin(), selectors.end(), [&](const std::string& s) {
    if (id == s) return true;
    return id.size() > s.size() && id.compare(0, s.size(), s) == 0 && (id[s.size()] == '.' || id[s.size()] == ':');
  });
}

MonomialIdeal random_squarefree_ideal(std::mt19937_64& engine, std::size_t num_vars) {
  std::bernoulli_distribution keep(0.3);
  std::vector<Monomial> gens;
  const VertexSet all = full_set(num_vars);
  // degree 2 then degree 3 supports, each in increasing numeric order
  for (int degree = 2; degree <= 3; ++degree) {
    for (VertexSet s = 1; s <= all; ++s) {
      if (cardinality(s) == degree && keep(engine)) gens.push_back(Monomial::from_support(num_vars, s));
    }
  }
  return minimalize(std::move(gens), RingContext(num_vars));
}

std::vector<Lemma21Trial> lemma21_trials(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 engine(seed);
  std::uniform_int_distribution<std::size_t> vars(3, 8);
  std::vector<Lemma21Trial> out;
  while (out.size() < count) {
    const auto n = vars(engine);
    auto ideal = random_squarefree_ideal(engine, n);
    // f: squarefree of degree 1 or 2 outside I (I : f must stay proper)
    std::vector<Monomial> candidates;
    for (VertexSet s = 1; s <= full_set(n); ++s) {
      const auto f = Monomial::from_support(n, s);
      if (cardinality(s) <= 2 && !contains(ideal, f)) candidates.push_back(f);
    }
    if (candidates.empty()) continue;
    std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
    auto f = candidates[pick(engine)];
    out.push_back(Lemma21Trial{std::move(ideal), std::move(f)});
  }
  return out;
}

std::vector<Lemma22Trial> lemma22_trials(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 engine(seed ^ 0x9e3779b97f4a7c15ull);
  std::vector<Lemma22Trial> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const auto s = std::uniform_int_distribution<std::size_t>(1, 7)(engine);
    const auto t = std::uniform_int_distribution<std::size_t>(1, 8 - s)(engine);
    auto left = random_squarefree_ideal(engine, s);
    auto right = random_squarefree_ideal(engine, t);
    out.push_back(Lemma22Trial{std::move(left), std::move(right)});
  }
  return out;
}

namespace {

ClaimParams params_n(long n) {
  ClaimParams p;
  p.n = n;
  return p;
}

ClaimParams params_nt(long n, long t) {
  ClaimParams p;
  p.n = n;
  p.t = t;
  return p;
}

class Campaign {
 public:
  explicit Campaign(const CampaignConfig& config) : config_(config) {}

  VerificationReport run() {
    report_.config = config_json();
    for (long n = std::max(3L, config_.n_min); n <= config_.n_max; ++n) per_n(n);
    if (selected("lemma2.1")) lemma21();
    if (selected("lemma2.2")) lemma22();
    if (selected("lemma2.3")) lemma23();
    report_.sort();
    return std::move(report_);
  }

 private:
  nlohmann::json config_json() const {
    return {{"n_min", config_.n_min},
            {"n_max", config_.n_max},
            {"t_max", config_.t_max},
            {"field", config_.field.name()},
            {"seed", config_.seed},
            {"claims", config_.claims},
            {"lemma21_trials", config_.lemma21_trials},
            {"lemma22_trials", config_.lemma22_trials},
            {"lemma23_limit", config_.lemma23_limit},
            {"charstab_n_max", config_.charstab_n_max},
            {"polarized_var_limit", config_.polarized_var_limit},
            {"power_n_max", config_.power_n_max}};
  }

  bool selected(const std::string& id) const {
    // a selector may name a family ("prop2.8") or a single member
    if (claim_selected(id, config_.claims)) return true;
    return std::any_of(config_.claims.begin(), config_.claims.end(),
                       [&](const std::string& s) { return claim_selected(s, {id}); });
  }

  template <typename Compute>
  void record(const std::string& id, ClaimParams params, nlohmann::json expected, Compute compute) {
    if (!claim_selected(id, config_.claims)) return;
    nlohmann::json computed;
    try {
      computed = compute();
    } catch (const std::exception& e) {
      computed = {{"error", e.what()}};
    }
    report_.checks.emplace_back(id, std::move(params), std::move(expected), std::move(computed));
  }

  std::size_t pd_of(long n, FieldSpec field) {
    const auto key = std::make_pair(n, field.characteristic());
    if (auto it = pd_cache_.find(key); it != pd_cache_.end()) return it->second;
    const auto pd = projective_dimension(square_path_ideal(n), field, config_.hochster);
    pd_cache_.emplace(key, pd);
    return pd;
  }

  long depth_of(long n, FieldSpec field) { return n - static_cast<long>(pd_of(n, field)); }

  void per_n(long n) {
    const auto field = config_.field;
    auto field_params = [&] {
      auto p = params_n(n);
      p.field = field.name();
      return p;
    };
    record("thm2.4", field_params(), depth_formula(n), [&] { return depth_of(n, field); });
    record("cor2.5", field_params(), pd_formula(n), [&] { return pd_of(n, field); });
    record("prop2.6", params_n(n), dim_formula(n), [&] { return height_and_dim(square_path_ideal(n)).dim; });
    if (n <= config_.facet_check_n_max) {
      record("prop2.6.facet", params_n(n), dim_formula(n),
             [&] { return stanley_reisner(square_path_ideal(n)).dimension() + 1; });
    }
    record("thm2.7", field_params(), n == 3 || n == 4,
           [&] { return is_cohen_macaulay(square_path_ideal(n), field, config_.hochster); });
    if (n >= 8) {
      // depth S/(I : x_{n-2}) = depth S_{n-7}/I_3(P_{n-7}^2) + 2, the ideal being 0 below 3 vertices
      const long m = n - 7;
      record("thm2.4.branch", field_params(), (m >= 3 ? depth_formula(m) : m) + 2, [&] {
        const auto ideal = square_path_ideal(n);
        const auto colon = colon_by_monomial(ideal, Monomial::variable(static_cast<std::size_t>(n), static_cast<std::size_t>(n - 3)));
        return depth_squarefree(colon, field, config_.hochster);
      });
      if (selected("identity")) identities(n);
    }
    if (n <= config_.charstab_n_max && selected("charstab")) {
      for (auto other : {FieldSpec::prime(3), FieldSpec::prime(5), FieldSpec::rationals()}) {
        auto p = params_n(n);
        p.field = other.name();
        long reference = 0;
        try {
          reference = depth_of(n, FieldSpec::prime(2));
        } catch (const std::exception&) {
          reference = -1;
        }
        record("charstab", p, reference, [&] { return depth_of(n, other); });
      }
    }
    if (n == 3) prop28_three();
    if (n == 4) prop28_four();
    if (n >= 5) prop28_general(n);
  }

  void identities(long n) {
    try {
      for (auto& c : replay_colon_identities(n)) {
        if (claim_selected(c.id, config_.claims)) report_.checks.push_back(std::move(c));
      }
    } catch (const std::exception& e) {
      record("identity:replay", params_n(n), "replayed", [&]() -> nlohmann::json { throw Error(e.what()); });
    }
  }

  void prop28_three() {
    const auto ideal = square_path_ideal(3);
    for (long t = 1; t <= config_.t_max; ++t) {
      auto p = params_nt(3, t);
      p.detail = "polarization";
      record("prop2.8.1", p, 2, [&] {
        return depth_general(ideal_power(ideal, static_cast<std::size_t>(t), config_.hochster.limits), config_.field, config_.hochster);
      });
    }
  }

  static std::size_t polarized_size(const MonomialIdeal& ideal) {
    std::size_t total = 0;
    for (std::size_t i = 0; i < ideal.num_vars(); ++i) total += std::max<Exponent>(1, ideal.max_exponent(i));
    return total;
  }

  void prop28_four() {
    const auto ideal = square_path_ideal(4);
    for (long t = 1; t <= config_.t_max; ++t) {
      const long expected = t == 1 ? 2 : (t == 2 ? 1 : 0);
      auto p = params_nt(4, t);
      std::optional<MonomialIdeal> maybe_power;
      try {
        maybe_power = ideal_power(ideal, static_cast<std::size_t>(t), config_.hochster.limits);
      } catch (const std::exception& e) {
        const std::string message = e.what();
        record("prop2.8.2", p, expected, [&]() -> nlohmann::json { throw Error(message); });
        continue;
      }
      const auto& power = *maybe_power;
      if (polarized_size(power) <= config_.polarized_var_limit) {
        p.detail = "polarization";
        record("prop2.8.2", p, expected, [&] { return depth_general(power, config_.field, config_.hochster); });
      } else {
        // the socle test decides depth 0 only
        p.detail = "socle";
        record("prop2.8.2", p, expected, [&]() -> nlohmann::json {
          if (max_ideal_is_associated(power).associated) return 0;
          return ">=1";
        });
      }
    }
    const auto u = product_of_variables(ideal.ring(), {1, 1, 2, 3, 4});
    auto p = params_nt(4, 2);
    p.detail = "x1^2*x2*x3*x4";
    record("prop2.8.2.symbolic", p, true, [&] {
      return contains(symbolic_power(ideal, 2), u) && !contains(ideal_power(ideal, 2), u);
    });
    const auto w = product_of_variables(ideal.ring(), {1, 1, 2, 2, 3, 3, 4, 4});
    p = params_nt(4, 3);
    p.detail = "x1^2*x2^2*x3^2*x4^2";
    record("prop2.8.2.socle-w", p, true, [&] { return is_socle_element(ideal_power(ideal, 3), w); });
  }

  static bool is_socle_element(const MonomialIdeal& ideal, const Monomial& u) {
    if (contains(ideal, u)) return false;
    for (std::size_t l = 0; l < ideal.num_vars(); ++l) {
      if (!contains(ideal, u * Monomial::variable(ideal.num_vars(), l))) return false;
    }
    return true;
  }

  void prop28_general(long n) {
    if (!selected("prop2.8.3") || n > config_.power_n_max) return;
    const long t0 = power_zero_threshold(n);
    std::optional<MonomialIdeal> power;
    auto get_power = [&]() -> const MonomialIdeal& {
      if (!power) power = ideal_power(square_path_ideal(n), static_cast<std::size_t>(t0), config_.hochster.limits);
      return *power;
    };
    auto p = params_nt(n, t0);
    p.detail = "socle";
    record("prop2.8.3", p, true, [&] { return max_ideal_is_associated(get_power()).associated; });
    const auto a = witness_monomial(n);
    p.detail = a.to_string();
    record("prop2.8.3.witness", p, true, [&] { return is_socle_element(get_power(), a); });
  }

  void lemma21() {
    const auto trials = lemma21_trials(config_.seed, config_.lemma21_trials);
    for (std::size_t k = 0; k < trials.size(); ++k) {
      const auto& trial = trials[k];
      ClaimParams p;
      p.n = static_cast<long>(trial.ideal.num_vars());
      p.trial = static_cast<long>(k);
      p.detail = "I=" + format_ideal(trial.ideal) + " f=" + trial.f.to_string();
      std::size_t d_ideal = 0, d_colon = 0, d_sum = 0;
      std::string failure;
      try {
        d_ideal = depth_squarefree(trial.ideal, config_.field, config_.hochster);
        d_colon = depth_squarefree(colon_by_monomial(trial.ideal, trial.f), config_.field, config_.hochster);
        d_sum = depth_squarefree(ideal_sum(trial.ideal, trial.f), config_.field, config_.hochster);
      } catch (const std::exception& e) {
        failure = e.what();
      }
      record("lemma2.1.i", p, true, [&]() -> nlohmann::json {
        if (!failure.empty()) throw Error(failure);
        return d_ideal == d_colon || d_ideal == d_sum;
      });
      if (failure.empty() && d_sum >= d_colon) {
        record("lemma2.1.ii", p, d_colon, [&] { return d_ideal; });
      }
    }
  }

  void lemma22() {
    const auto trials = lemma22_trials(config_.seed, config_.lemma22_trials);
    for (std::size_t k = 0; k < trials.size(); ++k) {
      const auto& trial = trials[k];
      const auto s = trial.left.num_vars(), t = trial.right.num_vars();
      ClaimParams p;
      p.n = static_cast<long>(s + t);
      p.trial = static_cast<long>(k);
      p.detail = "I=" + format_ideal(trial.left) + " J=" + format_ideal(trial.right) + " s=" + std::to_string(s);
      std::size_t expected = 0;
      try {
        expected = depth_squarefree(trial.left, config_.field, config_.hochster) +
                   depth_squarefree(trial.right, config_.field, config_.hochster);
      } catch (const std::exception&) {
        expected = 0;
      }
      record("lemma2.2", p, expected, [&] {
        const RingContext joint(s + t);
        const auto sum = ideal_sum(embed(trial.left, joint, 0), embed(trial.right, joint, s));
        return depth_squarefree(sum, config_.field, config_.hochster);
      });
    }
  }

  void lemma23() {
    ClaimParams p;
    p.detail = "1.." + std::to_string(config_.lemma23_limit);
    record("lemma2.3", p, true, [&]() -> nlohmann::json {
      for (long n = 1; n <= config_.lemma23_limit; ++n) {
        if (!lemma23_check(n)) return {{"first_failure", n}};
      }
      return true;
    });
  }

  const CampaignConfig& config_;
  VerificationReport report_;
  std::map<std::pair<long, std::uint32_t>, std::size_t> pd_cache_;
};

}  // namespace

VerificationReport run_campaign(const CampaignConfig& config) { return Campaign(config).run(); }

}  // namespace pathdepth
