#pragma once

#include <cstdint>
#include <vector>

namespace cyclo {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

// (a*b) mod m without overflow for any m < 2^64.
inline u64 mulmod(u64 a, u64 b, u64 m) { return u64((u128)a * b % m); }

u64 powmod(u64 a, u64 e, u64 m);

// Deterministic Miller-Rabin, exact for all n < 2^64.
bool is_prime(u64 n);

// Multiplicative order of a mod p, p prime. Rejects a divisible by p.
u64 order_mod(i64 a, u64 p);

// Least v >= 2 generating (Z/p)^*.
u64 smallest_primitive_root(u64 p);

// All primes in [lo, hi], ascending.
std::vector<u64> primes_in_range(u64 lo, u64 hi);

// The ambient convention layer: odd prime p, the least primitive root v, and
// the table vpow[n] = v^n mod p represented in [1, p-1]. Index arithmetic is
// mod p-1 so negative exponents are well defined.
struct cyclo_params {
    u64 p = 0;
    u64 v = 0;
    std::vector<u64> vpow;

    // v_n for arbitrary integer n (n reduced into [0, p-2]).
    u64 at(i64 n) const {
        i64 len = i64(p) - 1;
        return vpow[u64(((n % len) + len) % len)];
    }
};

// Rejects even or composite p.
cyclo_params make_params(u64 p);

// Least s >= 0 with v^s = d mod p; d must lie in [1, p-1].
u64 ind_v(const cyclo_params& params, u64 d);

}  // namespace cyclo
