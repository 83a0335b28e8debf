#include "cyclo/arith.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cyclo {

u64 powmod(u64 a, u64 e, u64 m) {
    if (m == 1) return 0;
    u64 r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This witness set decides primality for every n < 2^64.
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i + 1 < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

namespace {

std::vector<u64> prime_factors(u64 n) {
    std::vector<u64> out;
    for (u64 q = 2; q * q <= n; ++q) {
        if (n % q == 0) {
            out.push_back(q);
            while (n % q == 0) n /= q;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

u64 order_mod(i64 a, u64 p) {
    i64 pp = i64(p);
    u64 r = u64(((a % pp) + pp) % pp);
    if (r == 0) throw std::invalid_argument("order_mod: a is divisible by p");
    // Start from p-1 and strip prime factors while the power stays 1.
    u64 f = p - 1;
    for (u64 q : prime_factors(p - 1)) {
        while (f % q == 0 && powmod(r, f / q, p) == 1) f /= q;
    }
    return f;
}

u64 smallest_primitive_root(u64 p) {
    auto qs = prime_factors(p - 1);
    for (u64 v = 2; v < p; ++v) {
        bool ok = true;
        for (u64 q : qs) {
            if (powmod(v, (p - 1) / q, p) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return v;
    }
    throw std::logic_error("smallest_primitive_root: no generator found");
}

std::vector<u64> primes_in_range(u64 lo, u64 hi) {
    std::vector<u64> out;
    for (u64 n = std::max<u64>(lo, 2); n <= hi; ++n) {
        if (is_prime(n)) out.push_back(n);
    }
    return out;
}

cyclo_params make_params(u64 p) {
    if (p < 3 || p % 2 == 0 || !is_prime(p)) {
        throw std::invalid_argument("make_params: p must be an odd prime, got " + std::to_string(p));
    }
    cyclo_params params;
    params.p = p;
    params.v = smallest_primitive_root(p);
    params.vpow.resize(p - 1);
    params.vpow[0] = 1;
    for (u64 n = 1; n < p - 1; ++n) {
        params.vpow[n] = params.vpow[n - 1] * params.v % p;
    }
    return params;
}

u64 ind_v(const cyclo_params& params, u64 d) {
    if (d < 1 || d > params.p - 1) {
        throw std::invalid_argument("ind_v: d must lie in [1, p-1]");
    }
    for (u64 s = 0; s < params.p - 1; ++s) {
        if (params.vpow[s] == d) return s;
    }
    throw std::logic_error("ind_v: vpow is not a permutation");
}

}  // namespace cyclo
