#pragma once

#include "cyclo/arith.hpp"
#include "cyclo/poly.hpp"

namespace cyclo {

// P with coefficient v_{-i} at X^i, Q with the nonpositive delta_i, where
// P(X)(X - v) = p*Q(X) + v(X^{p-1} - 1) exactly over the integers. Q keeps
// its true integer coefficients; reduction mod h happens at call sites.
struct stickelberger_pair {
    cyclo_params params;
    int_poly P;
    int_poly Q;
    std::vector<i64> delta;  // delta_0 = 0, -p < delta_i <= 0
};

// Verifies every defining identity during construction and throws on any
// inexact division or bound violation instead of truncating.
stickelberger_pair build_pair(const cyclo_params& params);

// 0/1 polynomial with coefficient 1 at exactly the i with v_{-i} even.
int_poly pi_polynomial(const cyclo_params& params);

// P + p*Pi; the conductor-2p cross-construction used to validate it lives in
// the test suite.
int_poly s2_polynomial(const cyclo_params& params);

// I_d = { i in [0, p-2] : v_{(p-1)/2-i} + v_{(p-1)/2-i+ind_v(d)} > p } and its
// companion 0/1 polynomial Q_d. d must lie in [1, p-2].
struct index_set_result {
    std::vector<u64> members;  // ascending
    int_poly qd;
};
index_set_result index_set(const cyclo_params& params, u64 d);

// Coefficient i is (sum over j < f of v_{-(i+jm)}) / p with m = (p-1)/f; the
// division must be exact. Requires f | p-1 and f > 1.
// For f = 2 each column sums to exactly p, so every coefficient is 1,
// constant term included (the constant coefficient is (v_0 + v_{-(p-1)/2})/p
// = (1 + (p-1))/p = 1, which some presentations omit).
int_poly inertial_poly(const cyclo_params& params, u64 f);

}  // namespace cyclo
