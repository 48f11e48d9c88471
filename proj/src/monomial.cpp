#include "pathdepth/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <string_view>
#include <unordered_set>

#include "pathdepth/kernels.hpp"

namespace pathdepth {

RingContext::RingContext(std::size_t num_vars) : num_vars_(num_vars) {
  if (num_vars == 0) throw Error("a ring needs at least one variable");
}

std::string RingContext::label(std::size_t index) const {
  return "x" + std::to_string(index + 1);
}

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::vector<Exponent> exponents)
    : exponents_(std::move(exponents)),
      degree_(std::accumulate(exponents_.begin(), exponents_.end(), std::uint64_t{0})) {}

Monomial Monomial::unit(std::size_t num_vars) {
  return Monomial(std::vector<Exponent>(num_vars, 0));
}

Monomial Monomial::variable(std::size_t num_vars, std::size_t index) {
  if (index >= num_vars) throw Error("variable index out of range");
  std::vector<Exponent> e(num_vars, 0);
  e[index] = 1;
  return Monomial(std::move(e));
}

Monomial Monomial::from_support(std::size_t num_vars, VertexSet support) {
  if (num_vars < kMaxVertices && (support >> num_vars) != 0) {
    throw Error("support has a vertex outside the ring");
  }
  std::vector<Exponent> e(num_vars, 0);
  for (auto v : elements(support)) e[v] = 1;
  return Monomial(std::move(e));
}

bool Monomial::is_squarefree() const noexcept {
  return std::all_of(exponents_.begin(), exponents_.end(), [](Exponent e) { return e <= 1; });
}

Exponent Monomial::max_exponent() const noexcept {
  return exponents_.empty() ? 0 : *std::max_element(exponents_.begin(), exponents_.end());
}

VertexSet Monomial::support() const {
  if (exponents_.size() > kMaxVertices) throw Error("support needs at most 64 variables");
  VertexSet s = 0;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] > 0) s |= VertexSet{1} << i;
  }
  return s;
}

bool Monomial::divides(const Monomial& other) const {
  return kernels::divides(exponents_, other.exponents_);
}

std::string Monomial::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += "x" + std::to_string(i + 1);
    if (exponents_[i] > 1) out += "^" + std::to_string(exponents_[i]);
  }
  return out.empty() ? "1" : out;
}

namespace {

void require_same_size(const Monomial& a, const Monomial& b) {
  if (a.num_vars() != b.num_vars()) throw Error("monomials live in different rings");
}

template <typename Op>
Monomial combine(const Monomial& a, const Monomial& b, Op op) {
  require_same_size(a, b);
  std::vector<Exponent> e(a.num_vars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = op(a[i], b[i]);
  return Monomial(std::move(e));
}

}  // namespace

Monomial operator*(const Monomial& a, const Monomial& b) {
  return combine(a, b, [](Exponent x, Exponent y) { return x + y; });
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  return combine(a, b, [](Exponent x, Exponent y) { return std::max(x, y); });
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  return combine(a, b, [](Exponent x, Exponent y) { return std::min(x, y); });
}

Monomial quotient_by_gcd(const Monomial& a, const Monomial& b) {
  return combine(a, b, [](Exponent x, Exponent y) { return x > y ? x - y : Exponent{0}; });
}

bool canonical_less(const Monomial& a, const Monomial& b) {
  const auto da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return b < a;
}

// ---------------------------------------------------------------------------
// MonomialIdeal

MonomialIdeal MonomialIdeal::zero(RingContext ring) { return MonomialIdeal(ring, {}); }

bool MonomialIdeal::is_squarefree() const noexcept {
  return std::all_of(generators_.begin(), generators_.end(),
                     [](const Monomial& g) { return g.is_squarefree(); });
}

Exponent MonomialIdeal::max_exponent(std::size_t index) const {
  Exponent best = 0;
  for (const auto& g : generators_) best = std::max(best, g[index]);
  return best;
}

MonomialIdeal minimalize(std::vector<Monomial> gens, const RingContext& ring) {
  for (const auto& g : gens) {
    if (g.num_vars() != ring.num_vars()) {
      throw Error("monomial " + g.to_string() + " has " + std::to_string(g.num_vars()) +
                  " variables, ring has " + std::to_string(ring.num_vars()));
    }
    if (g.is_unit()) throw Error("unit ideal not supported");
  }
  std::sort(gens.begin(), gens.end(), canonical_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  // Only a generator of strictly smaller degree can divide a distinct one.
  std::vector<Monomial> kept;
  kept.reserve(gens.size());
  std::size_t lower_end = 0;
  std::uint64_t current_degree = 0;
  for (auto& g : gens) {
    const auto d = g.degree();
    if (d != current_degree) {
      lower_end = kept.size();
      current_degree = d;
    }
    const bool absorbed = std::any_of(kept.begin(), kept.begin() + static_cast<std::ptrdiff_t>(lower_end),
                                      [&](const Monomial& k) { return k.divides(g); });
    if (!absorbed) kept.push_back(std::move(g));
  }
  return MonomialIdeal(ring, std::move(kept));
}

namespace {

void require_same_ring(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.ring() != b.ring()) throw Error("ideals live in different rings");
}

void require_in_ring(const MonomialIdeal& a, const Monomial& u) {
  if (a.num_vars() != u.num_vars()) throw Error("monomial is not in the ideal's ring");
}

void check_product_budget(std::size_t a, std::size_t b, const Limits& limits, const char* what) {
  const auto raw = static_cast<std::uint64_t>(a) * static_cast<std::uint64_t>(b);
  if (raw > limits.max_products) {
    throw LimitExceeded(std::string(what) + " too large: " + std::to_string(raw) +
                        " intermediate products exceed the cap of " +
                        std::to_string(limits.max_products));
  }
}

}  // namespace

bool contains(const MonomialIdeal& ideal, const Monomial& u) {
  require_in_ring(ideal, u);
  for (const auto& g : ideal.generators()) {
    if (g.degree() > u.degree()) break;
    if (g.divides(u)) return true;
  }
  return false;
}

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  std::vector<Monomial> gens(a.generators().begin(), a.generators().end());
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return minimalize(std::move(gens), a.ring());
}

MonomialIdeal ideal_sum(const MonomialIdeal& a, const Monomial& f) {
  require_in_ring(a, f);
  std::vector<Monomial> gens(a.generators().begin(), a.generators().end());
  gens.push_back(f);
  return minimalize(std::move(gens), a.ring());
}

MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b, const Limits& limits) {
  require_same_ring(a, b);
  check_product_budget(a.size(), b.size(), limits, "product");
  std::vector<Monomial> gens;
  gens.reserve(a.size() * b.size());
  for (const auto& f : a.generators()) {
    for (const auto& g : b.generators()) gens.push_back(f * g);
  }
  return minimalize(std::move(gens), a.ring());
}

MonomialIdeal ideal_power(const MonomialIdeal& ideal, std::size_t t, const Limits& limits) {
  if (t == 0) throw Error("power exponent must be positive");
  MonomialIdeal acc = ideal;
  for (std::size_t step = 1; step < t; ++step) {
    check_product_budget(acc.size(), ideal.size(), limits, "power");
    acc = ideal_product(acc, ideal, limits);
  }
  return acc;
}

MonomialIdeal ideal_intersection(const MonomialIdeal& a, const MonomialIdeal& b,
                                 const Limits& limits) {
  require_same_ring(a, b);
  check_product_budget(a.size(), b.size(), limits, "intersection");
  std::vector<Monomial> gens;
  gens.reserve(a.size() * b.size());
  for (const auto& f : a.generators()) {
    for (const auto& g : b.generators()) gens.push_back(lcm(f, g));
  }
  return minimalize(std::move(gens), a.ring());
}

MonomialIdeal colon_by_monomial(const MonomialIdeal& ideal, const Monomial& f) {
  require_in_ring(ideal, f);
  if (contains(ideal, f)) {
    throw Error("unit ideal not supported: " + f.to_string() + " lies in the ideal");
  }
  std::vector<Monomial> gens;
  gens.reserve(ideal.size());
  for (const auto& g : ideal.generators()) gens.push_back(quotient_by_gcd(g, f));
  return minimalize(std::move(gens), ideal.ring());
}

namespace {

// Divisor queries against a fixed generator set: a trie keyed by the
// exponent of x1, then x2, and so on. A query only walks children whose
// key does not exceed the query exponent.
class DivisorTrie {
 public:
  DivisorTrie(std::span<const Monomial> gens, std::size_t n) : n_(n) {
    nodes_.emplace_back();
    for (const auto& g : gens) insert(g);
    for (auto& node : nodes_) std::sort(node.begin(), node.end());
  }

  bool divides_some(std::span<const Exponent> u) const { return search(0, 0, u); }

 private:
  using Node = std::vector<std::pair<Exponent, std::uint32_t>>;

  void insert(const Monomial& g) {
    std::uint32_t at = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      const auto it = std::find_if(nodes_[at].begin(), nodes_[at].end(),
                                   [&](const auto& child) { return child.first == g[i]; });
      if (it != nodes_[at].end()) {
        at = it->second;
        continue;
      }
      const auto id = static_cast<std::uint32_t>(nodes_.size());
      nodes_.emplace_back();
      nodes_[at].emplace_back(g[i], id);
      at = id;
    }
  }

  bool search(std::uint32_t at, std::size_t depth, std::span<const Exponent> u) const {
    if (depth == n_) return true;
    for (const auto& [key, child] : nodes_[at]) {
      if (key > u[depth]) break;
      if (search(child, depth + 1, u)) return true;
    }
    return false;
  }

  std::size_t n_;
  std::vector<Node> nodes_;
};

// Socle monomials u (u not in I, u*x_j in I for all j) inside the box
// u_j <= a_j - 1, a_j the largest exponent of x_j among the generators.
// Exponents are fixed one variable at a time. A branch dies once the fixed
// part alone lies in I, or once some fixed j has u*x_j outside I even with
// every free exponent at its ceiling.
class SocleSearch {
 public:
  explicit SocleSearch(const MonomialIdeal& ideal)
      : ideal_(ideal), n_(ideal.num_vars()), index_(ideal.generators(), ideal.num_vars()) {}

  std::vector<Monomial> run() {
    if (ideal_.is_zero()) return {};
    bound_.resize(n_);
    for (std::size_t j = 0; j < n_; ++j) {
      const Exponent a = ideal_.max_exponent(j);
      // x_j is a nonzerodivisor on S/I: no socle at all
      if (a == 0) return {};
      bound_[j] = a - 1;
    }
    low_.assign(n_, 0);
    high_ = bound_;
    descend(0);
    std::sort(found_.begin(), found_.end(), canonical_less);
    return std::move(found_);
  }

 private:
  void descend(std::size_t level) {
    if (level == n_) {
      found_.emplace_back(low_);
      return;
    }
    for (Exponent e = bound_[level] + 1; e-- > 0;) {
      low_[level] = e;
      high_[level] = e;
      if (!index_.divides_some(low_) && multiples_reachable(level)) descend(level + 1);
    }
    low_[level] = 0;
    high_[level] = bound_[level];
  }

  bool multiples_reachable(std::size_t level) {
    for (std::size_t j = 0; j <= level; ++j) {
      ++high_[j];
      const bool inside = index_.divides_some(high_);
      --high_[j];
      if (!inside) return false;
    }
    return true;
  }

  const MonomialIdeal& ideal_;
  std::size_t n_;
  DivisorTrie index_;
  std::vector<Exponent> bound_;
  std::vector<Exponent> low_;
  std::vector<Exponent> high_;
  std::vector<Monomial> found_;
};

}  // namespace

std::vector<Monomial> socle_generators(const MonomialIdeal& ideal) {
  return SocleSearch(ideal).run();
}

MonomialIdeal colon_by_variables(const MonomialIdeal& ideal) {
  auto socle = socle_generators(ideal);
  if (socle.empty()) return ideal;
  std::vector<Monomial> gens(ideal.generators().begin(), ideal.generators().end());
  gens.insert(gens.end(), socle.begin(), socle.end());
  return minimalize(std::move(gens), ideal.ring());
}

Polarization polarize(const MonomialIdeal& ideal, const Limits& limits) {
  const std::size_t n = ideal.num_vars();
  std::vector<std::size_t> block_start(n);
  std::vector<std::pair<std::size_t, Exponent>> origin;
  for (std::size_t i = 0; i < n; ++i) {
    block_start[i] = origin.size();
    const Exponent copies = std::max<Exponent>(1, ideal.max_exponent(i));
    for (Exponent j = 1; j <= copies; ++j) origin.emplace_back(i, j);
  }
  if (origin.size() > limits.max_polarized_vars) {
    throw LimitExceeded("polarization too large: " + std::to_string(origin.size()) +
                        " variables exceed the cap of " +
                        std::to_string(limits.max_polarized_vars));
  }
  const RingContext ring(origin.size());
  std::vector<Monomial> gens;
  gens.reserve(ideal.size());
  for (const auto& g : ideal.generators()) {
    std::vector<Exponent> e(origin.size(), 0);
    for (std::size_t i = 0; i < n; ++i) {
      for (Exponent j = 0; j < g[i]; ++j) e[block_start[i] + j] = 1;
    }
    gens.emplace_back(std::move(e));
  }
  const std::size_t added = origin.size() - n;
  return Polarization{minimalize(std::move(gens), ring), added, std::move(origin)};
}

MonomialIdeal embed(const MonomialIdeal& ideal, const RingContext& target, std::size_t offset) {
  if (offset + ideal.num_vars() > target.num_vars()) {
    throw Error("embedding does not fit into the target ring");
  }
  std::vector<Monomial> gens;
  gens.reserve(ideal.size());
  for (const auto& g : ideal.generators()) {
    std::vector<Exponent> e(target.num_vars(), 0);
    std::copy(g.exponents().begin(), g.exponents().end(), e.begin() + static_cast<std::ptrdiff_t>(offset));
    gens.emplace_back(std::move(e));
  }
  return minimalize(std::move(gens), target);
}

}  // namespace pathdepth
