#pragma once

#include <vector>

#include "cyclo/arith.hpp"

namespace cyclo {

// Alternating-sum family for p = 3 mod 4, p != 3. alt_sum is
// A = sum (-1)^i v_{-i} with A = -p * class_number exactly; oracle_count is
// the independent reduced-forms count for discriminant -p; half_sum is
// B = 2 * sum_{i <= (p-3)/2} (-1)^i v_{-i} - p. The index-set flags cover,
// for every d in [1, p-2]: |I_d| odd, signed sum over I_d nonzero and
// divisible by the class number.
struct quad_result {
    u64 p;
    i64 alt_sum;
    u64 class_number;
    i64 half_sum;
    i64 parity_sum;
    u64 oracle_count;
    bool half_divisible;
    bool parity_nonzero;
    bool parity_divisible;
    bool index_sets_ok;
    u64 first_bad_d;  // 0 when index_sets_ok
};

// Biquadratic family for p = 5 mod 8. S = s_even^2 + s_odd^2 from the
// alternating sums over even- and odd-index v_n; divisibility by p^2 is an
// observed property and is recorded, never assumed (p = 5 genuinely fails).
struct biquad_result {
    u64 p;
    i64 s_even;
    i64 s_odd;
    i64 S;
    bool divisible;
    i64 s_div_p2;  // S / p^2 when divisible, else 0
};

// Candidates mu = v_{2m+1} for a cyclic subgroup of order p^2: c1 is Q(mu)
// mod p; only mu with c1 = 0 get the second congruence c2 mod p^2.
struct psquare_candidate {
    u64 m;
    u64 mu;
    u64 c1;
    u64 c2;
    bool passes_mod_p;
    bool passes_mod_p2;
};
struct psquare_result {
    u64 p;
    std::vector<psquare_candidate> candidates;
};

// Inertial-degree principality: f = order of q mod p (must exceed 1),
// m = (p-1)/f, sums[l-1] = P_1(v^{lf}) mod p for l in [1, m-1]. The ideal
// class of q is provably trivial in the p-part when every sum is nonzero.
struct principality_result {
    u64 p;
    u64 q;
    u64 f;
    u64 m;
    std::vector<u64> sums;
    bool p_principal;
};

// Reduced primitive binary quadratic forms (a, b, c) with b^2 - 4ac = D,
// |b| <= a <= c, and b >= 0 when |b| = a or a = c. Exhaustive enumeration
// with a <= sqrt(|D|/3); fully independent of the formulas under test.
u64 reduced_forms_count(i64 D);

quad_result quad_report(const cyclo_params& params);
biquad_result biquad_report(const cyclo_params& params);
psquare_result psquare_report(const cyclo_params& params);
principality_result principality_test(const cyclo_params& params, u64 q);

}  // namespace cyclo
