#pragma once

#include <string>
#include <vector>

#include "cyclo/arith.hpp"

namespace cyclo {

// Dense integer polynomial, coefficient at index i belongs to X^i. Trailing
// zeros are trimmed; the zero polynomial has an empty coefficient vector.
// All in-scope magnitudes stay below p^3 < 2^63, so i64 is exact.
struct int_poly {
    std::vector<i64> c;

    int degree() const { return int(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    i64 coeff(std::size_t i) const { return i < c.size() ? c[i] : 0; }
    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool operator==(const int_poly&) const = default;
};

int_poly ip_from(std::vector<i64> coeffs);
int_poly ip_mul(const int_poly& a, const int_poly& b);
int_poly ip_sub(const int_poly& a, const int_poly& b);
int_poly ip_scale(const int_poly& a, i64 k);

// Dense polynomial over F_h, coefficients in [0, h). h must be prime wherever
// division happens (poly_gcd, factor_mod); representation alone needs h >= 2.
struct mod_poly {
    u64 h = 0;
    std::vector<u64> c;

    int degree() const { return int(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    u64 coeff(std::size_t i) const { return i < c.size() ? c[i] : 0; }
    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool operator==(const mod_poly&) const = default;
};

mod_poly mp_from(u64 h, std::vector<i64> coeffs);
mod_poly mp_xn_plus(u64 h, u64 n, i64 constant);  // X^n + constant over F_h
mod_poly mp_monic(const mod_poly& a);
mod_poly mp_mul(const mod_poly& a, const mod_poly& b);
mod_poly mp_add(const mod_poly& a, const mod_poly& b);
mod_poly mp_sub(const mod_poly& a, const mod_poly& b);
void mp_divrem(const mod_poly& a, const mod_poly& b, mod_poly* quot, mod_poly* rem);
mod_poly mp_mod(const mod_poly& a, const mod_poly& b);
mod_poly mp_div_exact(const mod_poly& a, const mod_poly& b);  // throws on nonzero remainder
u64 mp_eval(const mod_poly& a, u64 x);
mod_poly mp_derivative(const mod_poly& a);
mod_poly mp_mulmod(const mod_poly& a, const mod_poly& b, const mod_poly& f);
mod_poly mp_powmod(const mod_poly& base, u64 e, const mod_poly& f);

// X^(h^j) mod f, by j successive h-th powerings.
mod_poly xq_power(const mod_poly& f, u64 j);

struct factor {
    mod_poly poly;
    u64 mult;
    bool operator==(const factor&) const = default;
};
using factor_list = std::vector<factor>;

// Canonical order for factor lists: ascending degree, then lexicographic on
// the coefficient sequence read from the constant term.
bool factor_poly_less(const mod_poly& a, const mod_poly& b);

// Coefficients reduced into [0, h); rejects h < 2.
mod_poly reduce_mod(const int_poly& poly, u64 h);

// Monic gcd by Euclid; gcd(a, 0) = monic(a), gcd(0, 0) = 0. Moduli must match.
mod_poly poly_gcd(mod_poly a, mod_poly b);

// Complete factorization into monic irreducibles: squarefree decomposition,
// then distinct-degree splitting, then seeded equal-degree splitting. The
// canonical ordering makes the output independent of the seed. Rejects the
// zero polynomial; the modulus must be an odd prime.
factor_list factor_mod(const mod_poly& a, u64 seed);

// Horner evaluation of an integer polynomial at x, reduced mod m (m >= 2).
u64 poly_eval_mod(const int_poly& a, i64 x, u64 m);

// Remainder modulo X^d - 1: exponents folded mod d, exact integer arithmetic.
int_poly poly_mod_xd(const int_poly& a, u64 d);

// "X^2 + 10X + 6": descending degree, unit coefficients omitted.
std::string to_pretty(const mod_poly& a);
// Signed flavor for integer polynomials: "2X - 1", "X^2 - 2X - 6".
std::string to_pretty(const int_poly& a);
// Same with all spacing stripped: "X^2+10X+6".
std::string to_compact(const mod_poly& a);
// CSV dialect: "(X+1)^1;(X^2+10X+6)^1", every factor with explicit multiplicity.
std::string factors_csv(const factor_list& fs);
// Table style: bare polynomial for a single multiplicity-1 factor, otherwise
// "(X + 3)^2" / "(X + 203)(X + 418)(X + 419)".
std::string factors_pretty(const factor_list& fs);

// Deterministic RNG stream for the equal-degree splitting draws.
struct splitmix64 {
    u64 state;
    explicit splitmix64(u64 seed) : state(seed) {}
    u64 next() {
        u64 z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
};

}  // namespace cyclo
