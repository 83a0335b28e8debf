#include "cyclo/stickelberger.hpp"

#include <stdexcept>
#include <string>

namespace cyclo {

stickelberger_pair build_pair(const cyclo_params& params) {
    u64 p = params.p;
    i64 pp = i64(p);
    i64 vv = i64(params.v);

    stickelberger_pair pair;
    pair.params = params;
    pair.P.c.resize(p - 1);
    for (u64 i = 0; i < p - 1; ++i) pair.P.c[i] = i64(params.at(-i64(i)));
    pair.P.trim();

    pair.delta.assign(p - 1, 0);
    for (u64 i = 1; i < p - 1; ++i) {
        i64 num = i64(params.at(-(i64(i) - 1))) - vv * i64(params.at(-i64(i)));
        if (num % pp != 0) throw std::logic_error("build_pair: delta division inexact at i=" + std::to_string(i));
        i64 d = num / pp;
        if (d <= -pp || d > 0) throw std::logic_error("build_pair: delta out of (-p, 0] at i=" + std::to_string(i));
        // Same value as the floor form -[v_{-i} * v / p].
        if (d != -(i64(params.at(-i64(i))) * vv / pp)) {
            throw std::logic_error("build_pair: delta floor form mismatch at i=" + std::to_string(i));
        }
        pair.delta[i] = d;
    }
    pair.Q = ip_from(pair.delta);

    // P(X)(X - v) = p*Q(X) + v(X^{p-1} - 1), exactly.
    int_poly lhs = ip_mul(pair.P, ip_from({-vv, 1}));
    std::vector<i64> cyc(p, 0);
    cyc[0] = -vv;
    cyc[p - 1] = vv;
    int_poly diff = ip_sub(ip_sub(lhs, ip_scale(pair.Q, pp)), ip_from(cyc));
    if (!diff.is_zero()) throw std::logic_error("build_pair: defining identity violated");
    return pair;
}

int_poly pi_polynomial(const cyclo_params& params) {
    int_poly out;
    out.c.resize(params.p - 1);
    for (u64 i = 0; i < params.p - 1; ++i) out.c[i] = params.at(-i64(i)) % 2 == 0 ? 1 : 0;
    out.trim();
    return out;
}

int_poly s2_polynomial(const cyclo_params& params) {
    int_poly out;
    out.c.resize(params.p - 1);
    for (u64 i = 0; i < params.p - 1; ++i) {
        u64 vi = params.at(-i64(i));
        out.c[i] = i64(vi) + (vi % 2 == 0 ? i64(params.p) : 0);
    }
    out.trim();
    return out;
}

index_set_result index_set(const cyclo_params& params, u64 d) {
    if (d < 1 || d > params.p - 2) throw std::invalid_argument("index_set: d must lie in [1, p-2]");
    i64 half = i64(params.p - 1) / 2;
    i64 s = i64(ind_v(params, d));
    index_set_result out;
    out.qd.c.assign(params.p - 1, 0);
    for (u64 i = 0; i < params.p - 1; ++i) {
        if (params.at(half - i64(i)) + params.at(half - i64(i) + s) > params.p) {
            out.members.push_back(i);
            out.qd.c[i] = 1;
        }
    }
    out.qd.trim();
    return out;
}

int_poly inertial_poly(const cyclo_params& params, u64 f) {
    u64 p = params.p;
    if (f < 2 || (p - 1) % f != 0) {
        throw std::invalid_argument("inertial_poly: f must divide p-1 and exceed 1");
    }
    u64 m = (p - 1) / f;
    int_poly out;
    out.c.resize(m);
    for (u64 i = 0; i < m; ++i) {
        i64 col = 0;
        for (u64 j = 0; j < f; ++j) col += i64(params.at(-i64(i + j * m)));
        if (col % i64(p) != 0) throw std::logic_error("inertial_poly: column sum not divisible by p");
        out.c[i] = col / i64(p);
    }
    out.trim();
    return out;
}

}  // namespace cyclo
