#include "cyclo/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace cyclo {

namespace {

// Single-word Barrett reduction for moduli below 2^32; valid for x < 2^64.
struct barrett {
    u64 h;
    u64 m;
    explicit barrett(u64 h_) : h(h_), m(~u64(0) / h_) {}
    u64 reduce(u64 x) const {
        u64 q = u64((u128(x) * m) >> 64);
        u64 r = x - q * h;
        while (r >= h) r -= h;
        return r;
    }
};

u64 inv_mod(u64 a, u64 h) { return powmod(a, h - 2, h); }

void check_same_modulus(const mod_poly& a, const mod_poly& b) {
    if (a.h != b.h) throw std::invalid_argument("mod_poly: modulus mismatch");
}

// In-place remainder of a by monic-led b; br matches the common modulus.
void reduce_in_place(std::vector<u64>& a, const std::vector<u64>& b, u64 lead_inv, const barrett& br) {
    u64 h = br.h;
    while (a.size() >= b.size() && !a.empty()) {
        u64 f = br.reduce(a.back() * lead_inv);
        std::size_t off = a.size() - b.size();
        if (f != 0) {
            for (std::size_t i = 0; i + 1 < b.size(); ++i) {
                u64 t = br.reduce(f * b[i]);
                u64& x = a[off + i];
                x = x >= t ? x - t : x + h - t;
            }
        }
        a.pop_back();
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
}

// Same contract, but row updates accumulate unreduced: x += f * (h - b[i])
// grows by at most h^2 per quotient step, so with deg(a) < n and n * h^2
// below 2^63 nothing overflows; one Barrett pass runs at the end. b must
// arrive with reduced coefficients, which the final pass guarantees once
// polynomials start swapping roles.
void reduce_in_place_lazy(std::vector<u64>& a, const std::vector<u64>& b, u64 lead_inv, const barrett& br) {
    u64 h = br.h;
    while (a.size() >= b.size() && !a.empty()) {
        u64 lead = br.reduce(a.back());
        if (lead != 0) {
            u64 f = br.reduce(lead * lead_inv);
            std::size_t off = a.size() - b.size();
            for (std::size_t i = 0; i + 1 < b.size(); ++i) a[off + i] += f * (h - b[i]);
        }
        a.pop_back();
    }
    for (u64& x : a) x = br.reduce(x);
    while (!a.empty() && a.back() == 0) a.pop_back();
}

}  // namespace

int_poly ip_from(std::vector<i64> coeffs) {
    int_poly p{std::move(coeffs)};
    p.trim();
    return p;
}

int_poly ip_mul(const int_poly& a, const int_poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    int_poly out;
    out.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j) out.c[i + j] += a.c[i] * b.c[j];
    }
    out.trim();
    return out;
}

int_poly ip_sub(const int_poly& a, const int_poly& b) {
    int_poly out;
    out.c.assign(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < out.c.size(); ++i) out.c[i] = a.coeff(i) - b.coeff(i);
    out.trim();
    return out;
}

int_poly ip_scale(const int_poly& a, i64 k) {
    if (k == 0) return {};
    int_poly out = a;
    for (i64& x : out.c) x *= k;
    return out;
}

mod_poly mp_from(u64 h, std::vector<i64> coeffs) {
    if (h < 2) throw std::invalid_argument("mod_poly: modulus must be >= 2");
    mod_poly out;
    out.h = h;
    out.c.reserve(coeffs.size());
    i64 hh = i64(h);
    for (i64 x : coeffs) out.c.push_back(u64(((x % hh) + hh) % hh));
    out.trim();
    return out;
}

mod_poly mp_xn_plus(u64 h, u64 n, i64 constant) {
    std::vector<i64> cs(n + 1, 0);
    cs[0] = constant;
    cs[n] = 1;
    return mp_from(h, std::move(cs));
}

mod_poly mp_monic(const mod_poly& a) {
    if (a.is_zero()) return a;
    if (a.c.back() == 1) return a;
    mod_poly out = a;
    u64 inv = inv_mod(a.c.back(), a.h);
    for (u64& x : out.c) x = mulmod(x, inv, a.h);
    return out;
}

mod_poly mp_mul(const mod_poly& a, const mod_poly& b) {
    check_same_modulus(a, b);
    mod_poly out;
    out.h = a.h;
    if (a.is_zero() || b.is_zero()) return out;
    out.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t k = 0; k < out.c.size(); ++k) {
        u128 acc = 0;
        std::size_t lo = k >= b.c.size() ? k - b.c.size() + 1 : 0;
        std::size_t hi = std::min(k, a.c.size() - 1);
        for (std::size_t i = lo; i <= hi; ++i) acc += u128(a.c[i]) * b.c[k - i];
        out.c[k] = u64(acc % a.h);
    }
    out.trim();
    return out;
}

mod_poly mp_add(const mod_poly& a, const mod_poly& b) {
    check_same_modulus(a, b);
    mod_poly out;
    out.h = a.h;
    out.c.assign(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < out.c.size(); ++i) {
        u64 s = a.coeff(i) + b.coeff(i);
        out.c[i] = s >= a.h ? s - a.h : s;
    }
    out.trim();
    return out;
}

mod_poly mp_sub(const mod_poly& a, const mod_poly& b) {
    check_same_modulus(a, b);
    mod_poly out;
    out.h = a.h;
    out.c.assign(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < out.c.size(); ++i) {
        u64 x = a.coeff(i);
        u64 y = b.coeff(i);
        out.c[i] = x >= y ? x - y : x + a.h - y;
    }
    out.trim();
    return out;
}

void mp_divrem(const mod_poly& a, const mod_poly& b, mod_poly* quot, mod_poly* rem) {
    check_same_modulus(a, b);
    if (b.is_zero()) throw std::invalid_argument("mp_divrem: division by zero polynomial");
    barrett br(a.h);
    u64 lead_inv = inv_mod(b.c.back(), b.h);
    std::vector<u64> r = a.c;
    std::vector<u64> q(a.c.size() >= b.c.size() ? a.c.size() - b.c.size() + 1 : 0, 0);
    while (r.size() >= b.c.size() && !r.empty()) {
        u64 f = br.reduce(r.back() * lead_inv);
        std::size_t off = r.size() - b.c.size();
        q[off] = f;
        if (f != 0) {
            for (std::size_t i = 0; i + 1 < b.c.size(); ++i) {
                u64 t = br.reduce(f * b.c[i]);
                u64& x = r[off + i];
                x = x >= t ? x - t : x + a.h - t;
            }
        }
        r.pop_back();
        while (!r.empty() && r.back() == 0) r.pop_back();
    }
    if (quot) {
        quot->h = a.h;
        quot->c = std::move(q);
        quot->trim();
    }
    if (rem) {
        rem->h = a.h;
        rem->c = std::move(r);
    }
}

mod_poly mp_mod(const mod_poly& a, const mod_poly& b) {
    mod_poly r;
    mp_divrem(a, b, nullptr, &r);
    return r;
}

mod_poly mp_div_exact(const mod_poly& a, const mod_poly& b) {
    mod_poly q, r;
    mp_divrem(a, b, &q, &r);
    if (!r.is_zero()) throw std::logic_error("mp_div_exact: nonzero remainder");
    return q;
}

u64 mp_eval(const mod_poly& a, u64 x) {
    u64 acc = 0;
    x %= a.h;
    for (std::size_t i = a.c.size(); i-- > 0;) acc = (mulmod(acc, x, a.h) + a.c[i]) % a.h;
    return acc;
}

mod_poly mp_derivative(const mod_poly& a) {
    mod_poly out;
    out.h = a.h;
    for (std::size_t i = 1; i < a.c.size(); ++i) out.c.push_back(mulmod(a.c[i], i % a.h, a.h));
    out.trim();
    return out;
}

mod_poly mp_mulmod(const mod_poly& a, const mod_poly& b, const mod_poly& f) {
    return mp_mod(mp_mul(a, b), f);
}

mod_poly mp_powmod(const mod_poly& base, u64 e, const mod_poly& f) {
    mod_poly result = mp_from(f.h, {1});
    mod_poly b = mp_mod(base, f);
    while (e) {
        if (e & 1) result = mp_mulmod(result, b, f);
        b = mp_mulmod(b, b, f);
        e >>= 1;
    }
    return result;
}

mod_poly xq_power(const mod_poly& f, u64 j) {
    mod_poly r = mp_mod(mp_from(f.h, {0, 1}), f);
    for (u64 i = 0; i < j; ++i) r = mp_powmod(r, f.h, f);
    return r;
}

bool factor_poly_less(const mod_poly& a, const mod_poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] != b.c[i]) return a.c[i] < b.c[i];
    }
    return false;
}

mod_poly reduce_mod(const int_poly& poly, u64 h) {
    if (h < 2) throw std::invalid_argument("reduce_mod: modulus must be >= 2");
    return mp_from(h, poly.c);
}

mod_poly poly_gcd(mod_poly a, mod_poly b) {
    check_same_modulus(a, b);
    if (a.c.size() < b.c.size()) std::swap(a, b);
    if (b.is_zero()) return mp_monic(a);
    barrett br(a.h);
    bool lazy = u128(a.c.size()) * a.h * a.h < (u128(1) << 63);
    while (!b.is_zero()) {
        u64 lead_inv = inv_mod(b.c.back(), b.h);
        if (lazy) reduce_in_place_lazy(a.c, b.c, lead_inv, br);
        else reduce_in_place(a.c, b.c, lead_inv, br);
        std::swap(a, b);
    }
    return mp_monic(a);
}

namespace {

// f(X) = g(X^h) with zero derivative; coefficients are Frobenius-fixed, so the
// h-th root just keeps every h-th coefficient.
mod_poly take_hth_root(const mod_poly& f) {
    mod_poly out;
    out.h = f.h;
    for (std::size_t i = 0; i < f.c.size(); i += f.h) out.c.push_back(f.c[i]);
    out.trim();
    return out;
}

void squarefree_decompose(const mod_poly& f, u64 outer_mult, std::vector<std::pair<mod_poly, u64>>& out) {
    if (f.degree() < 1) return;
    mod_poly fp = mp_derivative(f);
    if (fp.is_zero()) {
        squarefree_decompose(take_hth_root(f), outer_mult * f.h, out);
        return;
    }
    mod_poly c = poly_gcd(f, fp);
    mod_poly w = mp_div_exact(f, c);
    u64 i = 1;
    while (w.degree() > 0) {
        mod_poly y = poly_gcd(w, c);
        mod_poly z = mp_div_exact(w, y);
        if (z.degree() > 0) out.emplace_back(z, i * outer_mult);
        w = std::move(y);
        c = mp_div_exact(c, w);
        ++i;
    }
    // What is left of c has every multiplicity divisible by h.
    squarefree_decompose(c, outer_mult, out);
}

// Splits squarefree g into (product of irreducibles of degree d, d) parts.
std::vector<std::pair<mod_poly, u64>> distinct_degree_split(const mod_poly& g) {
    std::vector<std::pair<mod_poly, u64>> parts;
    mod_poly rest = g;
    mod_poly r = mp_mod(mp_from(g.h, {0, 1}), rest);
    u64 d = 0;
    while (rest.degree() >= i64(2 * (d + 1))) {
        ++d;
        r = mp_powmod(r, rest.h, rest);
        mod_poly x = mp_from(g.h, {0, 1});
        mod_poly gd = poly_gcd(rest, mp_sub(r, x));
        if (gd.degree() > 0) {
            parts.emplace_back(gd, d);
            rest = mp_div_exact(rest, gd);
            r = mp_mod(r, rest);
        }
    }
    if (rest.degree() > 0) parts.emplace_back(rest, u64(rest.degree()));
    return parts;
}

// Cantor-Zassenhaus split of a product of irreducibles of common degree d.
// The (h^d - 1)/2 exponent is reached as norm-then-(h-1)/2, which keeps every
// intermediate exponent below 2^32.
void equal_degree_split(const mod_poly& f, u64 d, splitmix64& rng, std::vector<mod_poly>& out) {
    if (u64(f.degree()) == d) {
        out.push_back(mp_monic(f));
        return;
    }
    u64 h = f.h;
    for (;;) {
        std::vector<i64> rc(f.c.size() - 1);
        for (i64& x : rc) x = i64(rng.next() % h);
        mod_poly r = mp_from(h, std::move(rc));
        if (r.degree() < 1) continue;
        mod_poly g = poly_gcd(f, r);
        if (g.degree() == 0) {
            mod_poly u = r;
            mod_poly acc = r;
            for (u64 i = 1; i < d; ++i) {
                u = mp_powmod(u, h, f);
                acc = mp_mulmod(acc, u, f);
            }
            mod_poly t = mp_powmod(acc, (h - 1) / 2, f);
            g = poly_gcd(f, mp_sub(t, mp_from(h, {1})));
        }
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree_split(g, d, rng, out);
            equal_degree_split(mp_div_exact(f, g), d, rng, out);
            return;
        }
    }
}

}  // namespace

factor_list factor_mod(const mod_poly& a, u64 seed) {
    if (a.is_zero()) throw std::invalid_argument("factor_mod: zero polynomial");
    if (a.h == 2 || !is_prime(a.h)) throw std::invalid_argument("factor_mod: modulus must be an odd prime");
    factor_list out;
    if (a.degree() == 0) return out;
    splitmix64 rng(seed);
    std::vector<std::pair<mod_poly, u64>> squarefree;
    squarefree_decompose(mp_monic(a), 1, squarefree);
    for (const auto& [part, mult] : squarefree) {
        for (const auto& [prod, d] : distinct_degree_split(part)) {
            std::vector<mod_poly> irreducibles;
            equal_degree_split(prod, d, rng, irreducibles);
            for (mod_poly& f : irreducibles) out.push_back({std::move(f), mult});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const factor& x, const factor& y) { return factor_poly_less(x.poly, y.poly); });
    return out;
}

u64 poly_eval_mod(const int_poly& a, i64 x, u64 m) {
    if (m < 2) throw std::invalid_argument("poly_eval_mod: modulus must be >= 2");
    i64 mm = i64(m);
    u64 xr = u64(((x % mm) + mm) % mm);
    u64 acc = 0;
    for (std::size_t i = a.c.size(); i-- > 0;) {
        u64 ci = u64(((a.c[i] % mm) + mm) % mm);
        acc = (mulmod(acc, xr, m) + ci) % m;
    }
    return acc;
}

int_poly poly_mod_xd(const int_poly& a, u64 d) {
    if (d == 0) throw std::invalid_argument("poly_mod_xd: d must be >= 1");
    int_poly out;
    out.c.assign(d, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) out.c[i % d] += a.c[i];
    out.trim();
    return out;
}

namespace {

std::string render(const mod_poly& a, bool spaced) {
    if (a.is_zero()) return "0";
    std::string out;
    for (std::size_t i = a.c.size(); i-- > 0;) {
        u64 c = a.c[i];
        if (c == 0) continue;
        if (!out.empty()) out += spaced ? " + " : "+";
        if (i == 0) {
            out += std::to_string(c);
        } else {
            if (c != 1) out += std::to_string(c);
            out += "X";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace

std::string to_pretty(const mod_poly& a) { return render(a, true); }

std::string to_compact(const mod_poly& a) { return render(a, false); }

std::string to_pretty(const int_poly& a) {
    if (a.is_zero()) return "0";
    std::string out;
    for (i64 d = a.degree(); d >= 0; --d) {
        i64 c = a.coeff(d);
        if (c == 0) continue;
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        i64 mag = c < 0 ? -c : c;
        if (mag != 1 || d == 0) out += std::to_string(mag);
        if (d >= 1) out += "X";
        if (d >= 2) out += "^" + std::to_string(d);
    }
    return out;
}

std::string factors_csv(const factor_list& fs) {
    std::string out;
    for (const factor& f : fs) {
        if (!out.empty()) out += ";";
        out += "(" + to_compact(f.poly) + ")^" + std::to_string(f.mult);
    }
    return out;
}

std::string factors_pretty(const factor_list& fs) {
    if (fs.empty()) return "1";
    if (fs.size() == 1 && fs[0].mult == 1) return to_pretty(fs[0].poly);
    std::string out;
    for (const factor& f : fs) {
        out += "(" + to_pretty(f.poly) + ")";
        if (f.mult > 1) out += "^" + std::to_string(f.mult);
    }
    return out;
}

}  // namespace cyclo
