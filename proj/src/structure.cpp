#include "cyclo/structure.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <utility>

#include "cyclo/reference_table.hpp"
#include "cyclo/stickelberger.hpp"

namespace cyclo {

namespace {

std::vector<u64> odd_primes_upto(u64 limit) {
    std::vector<u64> out;
    if (limit < 3) return out;
    std::vector<bool> composite(limit + 1, false);
    for (u64 i = 2; i * i <= limit; ++i) {
        if (!composite[i]) {
            for (u64 j = i * i; j <= limit; j += i) composite[j] = true;
        }
    }
    for (u64 i = 3; i <= limit; i += 2) {
        if (!composite[i]) out.push_back(i);
    }
    return out;
}

// P mod (X^n + 1) has the closed form 2*v_{-k} - p at X^k: the upper half of
// P folds with v_{-(n+k)} = p - v_{-k} because v^n = -1 mod p.
std::vector<i64> folded_p(const cyclo_params& params) {
    u64 n = (params.p - 1) / 2;
    std::vector<i64> out(n);
    for (u64 k = 0; k < n; ++k) out[k] = 2 * i64(params.at(-i64(k))) - i64(params.p);
    return out;
}

std::vector<i64> folded_q(const std::vector<i64>& delta) {
    u64 n = delta.size() / 2;
    std::vector<i64> out(n);
    for (u64 k = 0; k < n; ++k) out[k] = delta[k] - delta[n + k];
    return out;
}

mod_poly gcd_with_xn1(u64 h, u64 n, const std::vector<i64>& folded) {
    return poly_gcd(mp_from(h, folded), mp_xn_plus(h, n, 1));
}

void check_h(const cyclo_params& params, u64 h) {
    if (h < 3 || h % 2 == 0 || !is_prime(h) || h > params.p * params.p) {
        throw std::invalid_argument("relative_gcd: h must be an odd prime in [3, p^2]");
    }
}

}  // namespace

mod_poly relative_gcd(const cyclo_params& params, u64 h) {
    check_h(params, h);
    u64 n = (params.p - 1) / 2;
    if (h == params.p) return gcd_with_xn1(h, n, folded_q(build_pair(params).delta));
    return gcd_with_xn1(h, n, folded_p(params));
}

std::vector<structure_record> scan_prime(const cyclo_params& params, u64 seed) {
    std::vector<structure_record> records;
    u64 p = params.p;
    u64 n = (p - 1) / 2;
    std::vector<i64> fp = folded_p(params);
    std::vector<i64> fq = folded_q(build_pair(params).delta);
    for (u64 h : odd_primes_upto(p * p)) {
        mod_poly g = gcd_with_xn1(h, n, h == p ? fq : fp);
        if (g.degree() < 1) continue;
        structure_record rec;
        rec.p = p;
        rec.h = h;
        rec.v = params.v;
        rec.factors = factor_mod(g, seed);
        rec.rho = 0;
        for (const factor& f : rec.factors) rec.rho += u64(f.poly.degree()) * f.mult;
        records.push_back(std::move(rec));
    }
    return records;
}

scan_report scan_range(u64 lo, u64 hi, u64 seed, unsigned jobs) {
    auto t0 = std::chrono::steady_clock::now();
    scan_report report;
    report.lo = lo;
    report.hi = hi;
    std::vector<u64> ps = primes_in_range(std::max<u64>(lo, 3), hi);
    std::vector<std::vector<structure_record>> per_prime(ps.size());
    if (jobs <= 1 || ps.size() <= 1) {
        for (std::size_t i = 0; i < ps.size(); ++i) per_prime[i] = scan_prime(make_params(ps[i]), seed);
    } else {
        unsigned nthreads = std::min<std::size_t>(jobs, ps.size());
        std::vector<std::thread> pool;
        pool.reserve(nthreads);
        for (unsigned t = 0; t < nthreads; ++t) {
            pool.emplace_back([&, t] {
                for (std::size_t i = t; i < ps.size(); i += nthreads) {
                    per_prime[i] = scan_prime(make_params(ps[i]), seed);
                }
            });
        }
        for (std::thread& th : pool) th.join();
    }
    for (std::vector<structure_record>& chunk : per_prime) {
        for (structure_record& rec : chunk) report.records.push_back(std::move(rec));
    }
    report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

std::vector<std::string> verify_against_reference(const scan_report& report,
                                                  const std::vector<structure_record>& reference) {
    std::vector<std::string> mismatches;
    std::map<std::pair<u64, u64>, const structure_record*> want;
    for (const structure_record& r : reference) {
        if (r.p >= report.lo && r.p <= report.hi) want[{r.p, r.h}] = &r;
    }
    std::map<std::pair<u64, u64>, const structure_record*> got;
    for (const structure_record& r : report.records) got[{r.p, r.h}] = &r;

    auto key_str = [](std::pair<u64, u64> k) {
        return "p=" + std::to_string(k.first) + " h=" + std::to_string(k.second);
    };
    for (const auto& [key, ref] : want) {
        auto it = got.find(key);
        if (it == got.end()) {
            mismatches.push_back(key_str(key) + ": missing from scan output");
            continue;
        }
        const structure_record* scan = it->second;
        if (scan->rho != ref->rho) {
            mismatches.push_back(key_str(key) + ": rho " + std::to_string(scan->rho) +
                                 " != reference " + std::to_string(ref->rho));
        }
        if (scan->v != ref->v) {
            mismatches.push_back(key_str(key) + ": v " + std::to_string(scan->v) +
                                 " != reference " + std::to_string(ref->v));
        }
        if (scan->factors != ref->factors) {
            mismatches.push_back(key_str(key) + ": factors " + factors_csv(scan->factors) +
                                 " != reference " + factors_csv(ref->factors));
        }
    }
    for (const auto& [key, scan] : got) {
        (void)scan;
        if (!want.count(key)) mismatches.push_back(key_str(key) + ": not in reference");
    }
    return mismatches;
}

bool root_order_check(const structure_record& record) {
    u64 d = std::gcd(record.h - 1, record.p - 1);
    for (const factor& f : record.factors) {
        if (f.poly.degree() != 1) continue;
        u64 nu = (record.h - f.poly.coeff(0)) % record.h;
        if (powmod(nu, d, record.h) != 1) return false;
    }
    return true;
}

std::string record_csv_line(const structure_record& r) {
    return std::to_string(r.p) + "," + std::to_string(r.h) + "," + std::to_string(r.rho) + "," +
           std::to_string(r.v) + "," + factors_csv(r.factors);
}

std::string record_json_line(const structure_record& r) {
    nlohmann::ordered_json j;
    j["p"] = r.p;
    j["h"] = r.h;
    j["rho"] = r.rho;
    j["v"] = r.v;
    j["factors"] = nlohmann::ordered_json::array();
    for (const factor& f : r.factors) {
        nlohmann::ordered_json jf;
        jf["coeffs"] = f.poly.c;
        jf["mult"] = f.mult;
        j["factors"].push_back(std::move(jf));
    }
    return j.dump();
}

std::string record_text_line(const structure_record& r) {
    return "p=" + std::to_string(r.p) + "  h=" + std::to_string(r.h) + "  rho=" + std::to_string(r.rho) +
           "  v=" + std::to_string(r.v) + "  GCD(X)=" + factors_pretty(r.factors);
}

namespace {

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& why) {
    throw std::runtime_error("reference line " + std::to_string(line_no) + ": " + why);
}

u64 parse_u64(const std::string& s, std::size_t line_no) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
        parse_fail(line_no, "expected unsigned integer, got '" + s + "'");
    }
    return std::stoull(s);
}

// "X^2+10X+6" -> coefficient vector, ascending.
mod_poly parse_compact_poly(const std::string& s, u64 h, std::size_t line_no) {
    std::vector<i64> coeffs;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t end = s.find('+', pos);
        if (end == std::string::npos) end = s.size();
        std::string term = s.substr(pos, end - pos);
        pos = end + 1;
        if (term.empty()) parse_fail(line_no, "empty term in '" + s + "'");
        u64 coeff = 1;
        u64 deg = 0;
        std::size_t x = term.find('X');
        if (x == std::string::npos) {
            coeff = parse_u64(term, line_no);
        } else {
            if (x > 0) coeff = parse_u64(term.substr(0, x), line_no);
            if (x + 1 < term.size()) {
                if (term[x + 1] != '^') parse_fail(line_no, "malformed term '" + term + "'");
                deg = parse_u64(term.substr(x + 2), line_no);
            } else {
                deg = 1;
            }
        }
        if (coeff >= h) parse_fail(line_no, "coefficient " + std::to_string(coeff) + " not reduced mod " + std::to_string(h));
        if (coeffs.size() < deg + 1) coeffs.resize(deg + 1, 0);
        if (coeffs[deg] != 0) parse_fail(line_no, "duplicate degree in '" + s + "'");
        coeffs[deg] = i64(coeff);
    }
    return mp_from(h, std::move(coeffs));
}

factor_list parse_factors(const std::string& s, u64 h, std::size_t line_no) {
    factor_list out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t end = s.find(';', pos);
        if (end == std::string::npos) end = s.size();
        std::string item = s.substr(pos, end - pos);
        pos = end + 1;
        if (item.size() < 4 || item.front() != '(') parse_fail(line_no, "malformed factor '" + item + "'");
        std::size_t close = item.rfind(")^");
        if (close == std::string::npos) parse_fail(line_no, "missing multiplicity in '" + item + "'");
        factor f;
        f.poly = parse_compact_poly(item.substr(1, close - 1), h, line_no);
        f.mult = parse_u64(item.substr(close + 2), line_no);
        if (f.mult == 0 || f.poly.degree() < 1) parse_fail(line_no, "degenerate factor '" + item + "'");
        out.push_back(std::move(f));
    }
    std::sort(out.begin(), out.end(),
              [](const factor& a, const factor& b) { return factor_poly_less(a.poly, b.poly); });
    return out;
}

}  // namespace

std::vector<structure_record> parse_reference_csv(const std::string& text) {
    std::vector<structure_record> out;
    std::size_t pos = 0;
    std::size_t line_no = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string::npos) end = text.size();
        std::string line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line == csv_header()) continue;
        std::vector<std::string> fields;
        std::size_t fpos = 0;
        while (true) {
            std::size_t comma = line.find(',', fpos);
            if (comma == std::string::npos) {
                fields.push_back(line.substr(fpos));
                break;
            }
            fields.push_back(line.substr(fpos, comma - fpos));
            fpos = comma + 1;
        }
        if (fields.size() != 5) parse_fail(line_no, "expected 5 fields, got " + std::to_string(fields.size()));
        structure_record rec;
        rec.p = parse_u64(fields[0], line_no);
        rec.h = parse_u64(fields[1], line_no);
        rec.rho = parse_u64(fields[2], line_no);
        rec.v = parse_u64(fields[3], line_no);
        rec.factors = parse_factors(fields[4], rec.h, line_no);
        out.push_back(std::move(rec));
    }
    return out;
}

const std::vector<structure_record>& embedded_reference() {
    static const std::vector<structure_record> table = parse_reference_csv(k_reference_table_csv);
    return table;
}

}  // namespace cyclo
