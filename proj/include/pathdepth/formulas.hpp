#pragma once

// Closed forms for the 3-path ideal of the square of a path, I_3(P_n^2),
// and constructions of the ideals that appear in their derivation.

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "pathdepth/monomial.hpp"
#include "pathdepth/report.hpp"

namespace pathdepth {

/// Floor and ceiling of a / b for b > 0, rounding toward -inf / +inf.
long floor_div(long a, long b);
long ceil_div(long a, long b);

/// ceil(n/7) + floor((n-2)/7) + 1, n >= 3
long depth_formula(long n);
/// n - 1 - ceil(n/7) - floor((n-2)/7), n >= 3
long pd_formula(long n);
/// ceil(n/4) + floor((n-2)/4) + 1, n >= 3
long dim_formula(long n);

/// ceil((n-1)/7) + floor((n-3)/7) + 1 >= ceil(n/7) + floor((n-2)/7)
bool lemma23_check(long n);

/// floor((n-2)/3) + 1, n >= 5: from this power on, depth S/I^t is 0.
long power_zero_threshold(long n);

/// x_{r+1} x_{r+2} ... x_n with r = (n-2) mod 3, a socle element of
/// I^{t0} for t0 = power_zero_threshold(n). Degree is 3*t0 - 1.
Monomial witness_monomial(long n);

/// I_3(P_m^2) = I_3 of the square of the path on m vertices, as an ideal of
/// `ring` on its first m variables. Zero when m < 3.
MonomialIdeal square_path_ideal(long m, const RingContext& ring);

/// I_3(P_n^2) in k[x1..xn].
MonomialIdeal square_path_ideal(long n);

/// The monomial prod x_i over the given 1-based indices.
Monomial product_of_variables(const RingContext& ring, std::initializer_list<long> indices);

/// Builds both sides of every colon/sum identity used in the depth
/// induction for I_3(P_n^2) and compares them canonically. Needs n >= 8.
std::vector<ClaimCheck> replay_colon_identities(long n);

}  // namespace pathdepth
