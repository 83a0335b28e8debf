#include "cyclo/congruence.hpp"

#include <numeric>
#include <stdexcept>

#include "cyclo/poly.hpp"
#include "cyclo/stickelberger.hpp"

namespace cyclo {

u64 reduced_forms_count(i64 D) {
    if (D >= 0 || (((D % 4) + 4) % 4) > 1) {
        throw std::invalid_argument("reduced_forms_count: D must be negative and 0 or 1 mod 4");
    }
    u64 count = 0;
    for (i64 a = 1; 3 * a * a <= -D; ++a) {
        for (i64 b = -a; b <= a; ++b) {
            if (((b - D) % 2 + 2) % 2 != 0) continue;
            i64 num = b * b - D;
            if (num % (4 * a) != 0) continue;
            i64 c = num / (4 * a);
            if (c < a) continue;
            if ((b < 0) && (-b == a || a == c)) continue;
            if (std::gcd(std::gcd(a, b < 0 ? -b : b), c) != 1) continue;
            ++count;
        }
    }
    return count;
}

quad_result quad_report(const cyclo_params& params) {
    u64 p = params.p;
    if (p % 4 != 3 || p == 3) throw std::invalid_argument("quad_report: p must be 3 mod 4 and not 3");
    quad_result out{};
    out.p = p;

    i64 a = 0;
    for (u64 i = 0; i < p - 1; ++i) a += (i % 2 == 0 ? 1 : -1) * i64(params.at(-i64(i)));
    out.alt_sum = a;
    if (a >= 0 || (-a) % i64(p) != 0) throw std::logic_error("quad_report: alternating sum is not -p*class_number");
    out.class_number = u64(-a / i64(p));

    i64 half = 0;
    for (u64 i = 0; i <= (p - 3) / 2; ++i) half += (i % 2 == 0 ? 1 : -1) * i64(params.at(-i64(i)));
    out.half_sum = 2 * half - i64(p);

    i64 parity = 0;
    for (u64 i = 0; i < p - 1; ++i) {
        if (params.at(-i64(i)) % 2 == 0) parity += i % 2 == 0 ? 1 : -1;
    }
    out.parity_sum = parity;

    out.oracle_count = reduced_forms_count(-i64(p));
    i64 cn = i64(out.class_number);
    auto divisible = [cn](i64 x) { return ((x % cn) + cn) % cn == 0; };
    out.half_divisible = divisible(out.half_sum);
    out.parity_nonzero = parity != 0;
    out.parity_divisible = divisible(parity);

    out.index_sets_ok = true;
    out.first_bad_d = 0;
    for (u64 d = 1; d <= p - 2; ++d) {
        index_set_result is = index_set(params, d);
        i64 signed_sum = 0;
        for (u64 i : is.members) signed_sum += i % 2 == 0 ? 1 : -1;
        if (is.members.size() % 2 != 1 || signed_sum == 0 || !divisible(signed_sum)) {
            out.index_sets_ok = false;
            out.first_bad_d = d;
            break;
        }
    }
    return out;
}

biquad_result biquad_report(const cyclo_params& params) {
    u64 p = params.p;
    if (p % 8 != 5) throw std::invalid_argument("biquad_report: p must be 5 mod 8");
    biquad_result out{};
    out.p = p;
    for (u64 i = 0; i <= (p - 3) / 2; ++i) {
        i64 sign = i % 2 == 0 ? 1 : -1;
        out.s_even += sign * i64(params.at(i64(2 * i)));
        out.s_odd += sign * i64(params.at(i64(2 * i + 1)));
    }
    out.S = out.s_even * out.s_even + out.s_odd * out.s_odd;
    i64 p2 = i64(p) * i64(p);
    out.divisible = out.S % p2 == 0;
    out.s_div_p2 = out.divisible ? out.S / p2 : 0;
    return out;
}

psquare_result psquare_report(const cyclo_params& params) {
    u64 p = params.p;
    stickelberger_pair pair = build_pair(params);
    psquare_result out;
    out.p = p;
    u64 p2 = p * p;
    for (u64 m = 1; m <= (p - 3) / 2; ++m) {
        psquare_candidate cand{};
        cand.m = m;
        cand.mu = params.at(i64(2 * m + 1));
        cand.c1 = poly_eval_mod(pair.Q, i64(cand.mu), p);
        cand.passes_mod_p = cand.c1 == 0;
        if (cand.passes_mod_p) {
            // c2 = mu^{p-2} * Q(mu) + (mu^{p-1} - 1) * Q'(mu), all mod p^2;
            // every intermediate stays below p^4 < 2^63.
            u64 mu = cand.mu;
            u64 a1 = powmod(mu, p - 2, p2) * poly_eval_mod(pair.Q, i64(mu), p2) % p2;
            u64 b1 = 0;
            u64 mu_pow = 1;  // mu^{i-1}
            for (u64 i = 1; i < p - 1; ++i) {
                u64 di = u64((pair.delta[i] % i64(p2) + i64(p2)) % i64(p2));
                b1 = (b1 + i % p2 * mu_pow % p2 * di) % p2;
                mu_pow = mu_pow * mu % p2;
            }
            u64 fermat = (powmod(mu, p - 1, p2) + p2 - 1) % p2;
            cand.c2 = (a1 + fermat * b1) % p2;
            cand.passes_mod_p2 = cand.c2 == 0;
        }
        out.candidates.push_back(cand);
    }
    return out;
}

principality_result principality_test(const cyclo_params& params, u64 q) {
    u64 p = params.p;
    if (!is_prime(q) || q == p) throw std::invalid_argument("principality_test: q must be a prime distinct from p");
    principality_result out;
    out.p = p;
    out.q = q;
    out.f = order_mod(i64(q), p);
    if (out.f == 1) throw std::invalid_argument("principality_test: q splits completely (f = 1), theorem inapplicable");
    out.m = (p - 1) / out.f;
    int_poly p1 = inertial_poly(params, out.f);

    // The l = m case degenerates to P_1(1) = (p-1)/2, which is never 0 mod p;
    // that is why l stops at m-1.
    i64 coeff_sum = 0;
    for (i64 c : p1.c) coeff_sum += c;
    if (coeff_sum != i64((p - 1) / 2)) throw std::logic_error("principality_test: P_1(1) != (p-1)/2");

    out.p_principal = true;
    for (u64 l = 1; l < out.m; ++l) {
        u64 s = poly_eval_mod(p1, i64(params.at(i64(l * out.f))), p);
        out.sums.push_back(s);
        if (s == 0) out.p_principal = false;
    }
    return out;
}

}  // namespace cyclo
