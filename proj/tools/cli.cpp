#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <optional>

#include <CLI11.hpp>

#include "pathdepth/betti.hpp"
#include "pathdepth/campaign.hpp"
#include "pathdepth/decomposition.hpp"
#include "pathdepth/graph.hpp"
#include "pathdepth/ideal_io.hpp"

namespace pathdepth::cli {

namespace {

struct CliConfig {
  std::string command;
  std::optional<long> n;
  std::size_t k = 2;
  std::size_t t = 3;
  std::optional<std::size_t> power;
  std::optional<std::string> ideal_text;
  std::optional<std::size_t> vars;
  std::string field = "2";
  std::optional<std::string> json_path;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  Limits limits;
  long t_max = 3;
  std::optional<long> n_min, n_max;
  std::vector<std::string> claims;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

std::uint64_t subset_cap_from_env(std::uint64_t fallback) {
  const char* raw = std::getenv("PATHDEPTH_MAX_SUBSETS");
  if (raw == nullptr || *raw == '\0') return fallback;
  std::uint64_t value = 0;
  const char* end = raw + std::char_traits<char>::length(raw);
  const auto [ptr, ec] = std::from_chars(raw, end, value);
  if (ec != std::errc() || ptr != end) throw UsageError("PATHDEPTH_MAX_SUBSETS must be a non-negative integer");
  return value;
}

class Session {
 public:
  Session(CliConfig config, std::ostream& out, std::ostream& err)
      : config_(std::move(config)), out_(out), err_(err), field_(FieldSpec::parse(config_.field)) {
    options_.limits = config_.limits;
    options_.threads = config_.threads;
    options_.progress = [this](std::uint64_t done, std::uint64_t total) {
      if (total < (1u << 16)) return;
      if (done % (1u << 16) == 0 || done == total) {
        err_ << "\rsubsets " << done << "/" << total << (done == total ? "\n" : "") << std::flush;
      }
    };
  }

  int run() {
    const auto& c = config_.command;
    if (c == "verify") return verify();
    if (c == "ideal") return ideal_command();
    if (c == "depth") return depth_command();
    if (c == "pd") return pd_command();
    if (c == "dim") return dim_command();
    if (c == "betti") return betti_command();
    if (c == "cm") return cm_command();
    if (c == "decompose") return decompose_command();
    if (c == "ass-max") return ass_max_command();
    if (c == "power") return power_command();
    if (c == "symbolic-power") return symbolic_power_command();
    throw UsageError("unknown command " + c);
  }

 private:
  MonomialIdeal base_ideal() const {
    if (config_.ideal_text) {
      auto ideal = parse_ideal(*config_.ideal_text, config_.vars);
      return ideal;
    }
    if (!config_.n) throw UsageError("give --n for the path family or --ideal for an explicit ideal");
    if (*config_.n < 1 || *config_.n > static_cast<long>(kMaxVertices)) {
      throw UsageError("--n must lie in 1..64");
    }
    const auto n = static_cast<std::size_t>(*config_.n);
    if (config_.k == 0) throw UsageError("--k must be positive");
    if (config_.t == 0) throw UsageError("--t must be positive");
    auto ideal = path_ideal(graph_power(path_graph(n), config_.k), config_.t, config_.limits);
    if (config_.vars) {
      if (*config_.vars < n) throw UsageError("--vars is smaller than --n");
      ideal = embed(ideal, RingContext(*config_.vars), 0);
    }
    return ideal;
  }

  // the base ideal raised to --power when given
  MonomialIdeal target_ideal() const {
    auto ideal = base_ideal();
    if (config_.power) {
      if (*config_.power == 0) throw UsageError("--power must be positive");
      if (ideal.is_zero()) return ideal;
      ideal = ideal_power(ideal, *config_.power, config_.limits);
    }
    return ideal;
  }

  static MonomialIdeal radical(const MonomialIdeal& ideal) {
    std::vector<Monomial> gens;
    for (const auto& g : ideal.generators()) gens.push_back(Monomial::from_support(ideal.num_vars(), g.support()));
    return minimalize(std::move(gens), ideal.ring());
  }

  std::size_t pd_of(const MonomialIdeal& ideal) const {
    return ideal.num_vars() - depth_general(ideal, field_, options_);
  }

  void write_json(const nlohmann::json& j) const {
    if (!config_.json_path) return;
    std::ofstream file(*config_.json_path);
    if (!file) throw Error("cannot write " + *config_.json_path);
    file << j.dump(2) << "\n";
  }

  int ideal_command() {
    const auto ideal = target_ideal();
    out_ << format_ideal(ideal) << "\n";
    write_json(ideal_to_json(ideal));
    return 0;
  }

  int depth_command() {
    const auto ideal = target_ideal();
    const auto depth = depth_general(ideal, field_, options_);
    out_ << "depth = " << depth << "\n";
    write_json({{"depth", depth}, {"num_vars", ideal.num_vars()}, {"field", field_.name()}});
    return 0;
  }

  int pd_command() {
    const auto ideal = target_ideal();
    const auto pd = pd_of(ideal);
    out_ << "pd = " << pd << "\n";
    write_json({{"pd", pd}, {"num_vars", ideal.num_vars()}, {"field", field_.name()}});
    return 0;
  }

  int dim_command() {
    const auto ideal = target_ideal();
    const auto hd = height_and_dim(radical(ideal));
    out_ << "dim = " << hd.dim << "\n";
    write_json({{"dim", hd.dim}, {"height", hd.height}});
    return 0;
  }

  int betti_command() {
    const auto ideal = target_ideal();
    if (!ideal.is_squarefree()) {
      throw UsageError("betti needs a squarefree ideal; polarize first or query depth/pd, which polarize");
    }
    const auto table = hochster_betti(ideal, field_, options_);
    const auto totals = table.totals();
    for (const auto& [key, value] : table.entries()) {
      out_ << "beta_" << key.i << "," << format_vertex_set(key.subset) << " = " << value << "\n";
    }
    out_ << "totals:";
    for (auto v : totals) out_ << " " << v;
    out_ << "\npd = " << table.projective_dimension() << "\n";
    write_json(betti_to_json(table));
    return 0;
  }

  int cm_command() {
    const auto ideal = target_ideal();
    const auto depth = depth_general(ideal, field_, options_);
    const auto dim = height_and_dim(radical(ideal)).dim;
    const bool cm = depth == dim;
    out_ << "Cohen-Macaulay: " << (cm ? "true" : "false") << " (depth " << depth << ", dim " << dim << ")\n";
    write_json({{"cohen_macaulay", cm}, {"depth", depth}, {"dim", dim}, {"field", field_.name()}});
    return 0;
  }

  int decompose_command() {
    const auto ideal = target_ideal();
    if (!ideal.is_squarefree()) throw UsageError("decompose needs a squarefree ideal; drop --power");
    const auto primes = primary_decomposition(ideal);
    const auto hd = height_and_dim(ideal);
    for (const auto& p : primes) out_ << format_ideal(p.ideal(ideal.ring())) << "\n";
    out_ << "height = " << hd.height << ", dim = " << hd.dim << "\n";
    write_json(decomposition_to_json(primes, hd));
    return 0;
  }

  int ass_max_command() {
    const auto ideal = target_ideal();
    const auto result = max_ideal_is_associated(ideal);
    out_ << "maximal ideal associated: " << (result.associated ? "true" : "false");
    if (result.witness) out_ << " (witness " << result.witness->to_string() << ")";
    out_ << "\n";
    nlohmann::json j{{"associated", result.associated}};
    j["witness"] = result.witness ? nlohmann::json(result.witness->to_string()) : nlohmann::json();
    write_json(j);
    return 0;
  }

  int power_command() {
    if (!config_.power) throw UsageError("power needs --power <t>");
    return ideal_command();
  }

  int symbolic_power_command() {
    if (!config_.power) throw UsageError("symbolic-power needs --power <t>");
    const auto ideal = base_ideal();
    const auto result = symbolic_power(ideal, *config_.power, config_.limits);
    out_ << format_ideal(result) << "\n";
    write_json(ideal_to_json(result));
    return 0;
  }

  int verify() {
    CampaignConfig campaign;
    campaign.field = field_;
    campaign.seed = config_.seed;
    campaign.t_max = config_.t_max;
    campaign.claims = config_.claims;
    campaign.hochster = options_;
    campaign.hochster.progress = nullptr;
    if (config_.n) {
      campaign.n_min = campaign.n_max = *config_.n;
    }
    if (config_.n_min) campaign.n_min = *config_.n_min;
    if (config_.n_max) campaign.n_max = *config_.n_max;
    if (campaign.n_min < 3) throw UsageError("verify needs n >= 3");
    if (campaign.n_max > 16) throw UsageError("verify supports n <= 16; larger n exceeds the subset cap");
    if (campaign.t_max < 1) throw UsageError("--t-max must be positive");
    const auto report = run_campaign(campaign);
    report.print_table(out_);
    write_json(report.to_json());
    return report.all_passed() ? 0 : 2;
  }

  CliConfig config_;
  std::ostream& out_;
  std::ostream& err_;
  FieldSpec field_;
  HochsterOptions options_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliConfig config;
  CLI::App app{"Homological invariants of path ideals of graph powers"};
  app.name("pathdepth");
  app.require_subcommand(1);
  app.fallthrough();

  app.add_option("--n", config.n, "number of path vertices");
  app.add_option("--k", config.k, "graph power (default 2)");
  app.add_option("--t", config.t, "path length in vertices (default 3)");
  app.add_option("--power", config.power, "power exponent");
  app.add_option("--ideal", config.ideal_text, "explicit ideal, e.g. \"x1*x2, x2^2*x3\"");
  app.add_option("--vars", config.vars, "number of ring variables");
  app.add_option("--field", config.field, "2, 3, 5, ..., or Q (default 2)");
  app.add_option("--json", config.json_path, "also write JSON to this path");
  app.add_option("--seed", config.seed, "seed for randomized checks");
  app.add_option("--threads", config.threads, "worker threads, 0 = auto");
  app.add_option("--max-subsets", config.limits.max_subsets, "cap on Hochster subsets");
  app.add_option("--max-products", config.limits.max_products, "cap on generator products");
  app.add_option("--max-polarized-vars", config.limits.max_polarized_vars, "cap on polarized variables");
  app.add_option("--t-max", config.t_max, "largest power checked by verify");
  app.add_option("--n-min", config.n_min, "smallest n checked by verify");
  app.add_option("--n-max", config.n_max, "largest n checked by verify");

  for (const char* name : {"ideal", "depth", "pd", "dim", "betti", "cm", "decompose", "ass-max", "power",
                           "symbolic-power"}) {
    app.add_subcommand(name)->callback([&config, name] { config.command = name; });
  }
  auto* verify = app.add_subcommand("verify", "compare closed forms against computed values");
  verify->add_option("claims", config.claims, "claim ids or families, e.g. thm2.4 prop2.8");
  verify->callback([&config] { config.command = "verify"; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    config.limits.max_subsets = subset_cap_from_env(config.limits.max_subsets);
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << " (run with --help for usage)\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    return Session(std::move(config), out, err).run();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace pathdepth::cli
