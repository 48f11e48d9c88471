#include "pathdepth/formulas.hpp"

#include <stdexcept>
#include <string>

#include "pathdepth/graph.hpp"
#include "pathdepth/ideal_io.hpp"

namespace pathdepth {

long floor_div(long a, long b) {
  if (b <= 0) throw Error("floor_div needs a positive divisor");
  const long q = a / b;
  return (a % b != 0 && a < 0) ? q - 1 : q;
}

long ceil_div(long a, long b) {
  if (b <= 0) throw Error("ceil_div needs a positive divisor");
  const long q = a / b;
  return (a % b != 0 && a > 0) ? q + 1 : q;
}

namespace {

void require_at_least(long n, long minimum, const char* what) {
  if (n < minimum) {
    throw Error(std::string(what) + " needs n >= " + std::to_string(minimum) + ", got " + std::to_string(n));
  }
}

}  // namespace

long depth_formula(long n) {
  require_at_least(n, 3, "depth_formula");
  return ceil_div(n, 7) + floor_div(n - 2, 7) + 1;
}

long pd_formula(long n) {
  require_at_least(n, 3, "pd_formula");
  const long pd = n - 1 - ceil_div(n, 7) - floor_div(n - 2, 7);
  if (pd + depth_formula(n) != n) throw std::logic_error("pd and depth closed forms disagree");
  return pd;
}

long dim_formula(long n) {
  require_at_least(n, 3, "dim_formula");
  return ceil_div(n, 4) + floor_div(n - 2, 4) + 1;
}

bool lemma23_check(long n) {
  require_at_least(n, 1, "lemma23_check");
  return ceil_div(n - 1, 7) + floor_div(n - 3, 7) + 1 >= ceil_div(n, 7) + floor_div(n - 2, 7);
}

long power_zero_threshold(long n) {
  require_at_least(n, 5, "power_zero_threshold");
  return floor_div(n - 2, 3) + 1;
}

Monomial witness_monomial(long n) {
  const long t0 = power_zero_threshold(n);
  const long r = (n - 2) % 3;
  std::vector<Exponent> e(static_cast<std::size_t>(n), 0);
  for (long i = r + 1; i <= n; ++i) e[static_cast<std::size_t>(i - 1)] = 1;
  Monomial a(std::move(e));
  if (static_cast<long>(a.degree()) != 3 * t0 - 1) throw std::logic_error("witness degree is not 3*t0 - 1");
  return a;
}

MonomialIdeal square_path_ideal(long m, const RingContext& ring) {
  if (m > static_cast<long>(ring.num_vars())) throw Error("path does not fit into the ring");
  if (m < 3) return MonomialIdeal::zero(ring);
  const auto own = path_ideal(graph_power(path_graph(static_cast<std::size_t>(m)), 2), 3);
  return embed(own, ring, 0);
}

MonomialIdeal square_path_ideal(long n) {
  require_at_least(n, 1, "square_path_ideal");
  return square_path_ideal(n, RingContext(static_cast<std::size_t>(n)));
}

Monomial product_of_variables(const RingContext& ring, std::initializer_list<long> indices) {
  std::vector<Exponent> e(ring.num_vars(), 0);
  for (long i : indices) {
    if (i < 1 || i > static_cast<long>(ring.num_vars())) {
      throw Error("variable index x" + std::to_string(i) + " is out of range");
    }
    e[static_cast<std::size_t>(i - 1)] += 1;
  }
  return Monomial(std::move(e));
}

namespace {

// Ideal sums written the way the identities display them.
class IdentityBuilder {
 public:
  explicit IdentityBuilder(long n) : n_(n), ring_(static_cast<std::size_t>(n)) {}

  const RingContext& ring() const { return ring_; }

  /// x_{n - offset}
  Monomial x(long offset) const { return product_of_variables(ring_, {n_ - offset}); }
  Monomial xx(long a, long b) const { return product_of_variables(ring_, {n_ - a, n_ - b}); }

  MonomialIdeal path(long offset) const { return square_path_ideal(n_ - offset, ring_); }

  MonomialIdeal plus(const MonomialIdeal& base, std::vector<Monomial> extra) const {
    std::vector<Monomial> gens(base.generators().begin(), base.generators().end());
    gens.insert(gens.end(), extra.begin(), extra.end());
    return minimalize(std::move(gens), ring_);
  }

 private:
  long n_;
  RingContext ring_;
};

}  // namespace

std::vector<ClaimCheck> replay_colon_identities(long n) {
  if (n < 8) {
    throw Error("identity replay needs n >= 8: x_{n-7} would be x" + std::to_string(n - 7) +
                ", which is out of range");
  }
  const IdentityBuilder b(n);
  const auto ideal = b.path(0);
  std::vector<ClaimCheck> out;
  auto check = [&](const std::string& name, const MonomialIdeal& lhs, const MonomialIdeal& rhs) {
    ClaimParams params;
    params.n = n;
    out.emplace_back("identity:" + name, params, format_ideal(rhs), format_ideal(lhs));
  };

  // (i) I : x_{n-2} = I_3(P_{n-5}^2) + J
  const auto colon = colon_by_monomial(ideal, b.x(2));
  check("colon-i", colon,
        b.plus(b.path(5), {b.xx(4, 3), b.xx(3, 1), b.xx(1, 0), b.xx(5, 3), b.xx(4, 1), b.xx(5, 4),
                           b.xx(3, 0), b.xx(6, 4), b.xx(4, 0)}));

  // (ii) (I : x_{n-2}) : x_{n-4}, in both displayed forms
  const auto colon2 = colon_by_monomial(colon, b.x(4));
  const std::vector<Monomial> five{b.x(6), b.x(5), b.x(3), b.x(1), b.x(0)};
  check("colon-ii", colon2, b.plus(b.path(7), five));
  check("colon-ii.unreduced", colon2, b.plus(b.path(5), five));

  // the other branch of the same step
  const auto with4 = ideal_sum(colon, b.x(4));
  check("colon-aux-1", with4, b.plus(b.path(5), {b.x(4), b.xx(3, 1), b.xx(1, 0), b.xx(5, 3), b.xx(3, 0)}));
  const auto with4_colon3 = colon_by_monomial(with4, b.x(3));
  check("colon-aux-2", with4_colon3, b.plus(b.path(6), {b.x(5), b.x(4), b.x(1), b.x(0)}));
  check("colon-aux-2.unreduced", with4_colon3, b.plus(b.path(5), {b.x(5), b.x(4), b.x(1), b.x(0)}));
  check("colon-aux-3", ideal_sum(with4, b.x(3)), b.plus(b.path(5), {b.x(4), b.x(3), b.xx(1, 0)}));

  // second branch of the top step: (I, x_{n-2})
  const auto with2 = ideal_sum(ideal, b.x(2));
  check("colon-aux-4", ideal_sum(with2, b.x(3)), b.plus(b.path(4), {b.x(2), b.x(3)}));

  // (iii) (I, x_{n-2}) : x_{n-3} = I_3(P_{n-6}^2) + L
  const auto h = colon_by_monomial(with2, b.x(3));
  check("colon-iii", h,
        b.plus(b.path(6), {b.x(2), b.xx(5, 4), b.xx(6, 4), b.xx(6, 5), b.xx(7, 5), b.xx(1, 0), b.xx(4, 1),
                           b.xx(5, 1)}));

  // (iv) refinements of H by x_{n-5} and x_{n-4}
  const auto h_colon5 = colon_by_monomial(h, b.x(5));
  check("colon-iv.a", h_colon5, b.plus(b.path(8), {b.x(1), b.x(2), b.x(4), b.x(6), b.x(7)}));
  check("colon-iv.a.unreduced", h_colon5, b.plus(b.path(6), {b.x(1), b.x(2), b.x(4), b.x(6), b.x(7)}));
  const auto h_with5 = ideal_sum(h, b.x(5));
  check("colon-iv.b", h_with5, b.plus(b.path(6), {b.x(2), b.x(5), b.xx(6, 4), b.xx(4, 1), b.xx(1, 0)}));
  const auto h_with5_colon4 = colon_by_monomial(h_with5, b.x(4));
  check("colon-iv.c", h_with5_colon4, b.plus(b.path(7), {b.x(2), b.x(5), b.x(6), b.x(1)}));
  check("colon-iv.c.unreduced", h_with5_colon4, b.plus(b.path(6), {b.x(2), b.x(5), b.x(6), b.x(1)}));
  check("colon-iv.d", ideal_sum(h_with5, b.x(4)), b.plus(b.path(6), {b.x(2), b.x(4), b.x(5), b.xx(1, 0)}));
  return out;
}

}  // namespace pathdepth
