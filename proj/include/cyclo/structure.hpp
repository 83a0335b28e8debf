#pragma once

#include <string>
#include <vector>

#include "cyclo/arith.hpp"
#include "cyclo/poly.hpp"

namespace cyclo {

// One table row: an odd prime h <= p^2 whose gcd registered with positive
// degree, its factorization over F_h, and rho = sum of deg * mult.
struct structure_record {
    u64 p;
    u64 h;
    u64 rho;
    u64 v;
    factor_list factors;
    bool operator==(const structure_record&) const = default;
};

struct scan_report {
    std::vector<structure_record> records;  // sorted by (p, h)
    u64 lo = 0;
    u64 hi = 0;
    double elapsed_seconds = 0.0;
};

// Monic gcd of (P if h != p, else Q) reduced mod h against X^{(p-1)/2} + 1.
// h must be an odd prime with 3 <= h <= p^2. A degree-0 result means h does
// not register.
mod_poly relative_gcd(const cyclo_params& params, u64 h);

// All records for one p: every odd prime h in [3, p^2] with deg(gcd) > 0,
// ascending in h, factorizations canonical.
std::vector<structure_record> scan_prime(const cyclo_params& params, u64 seed);

// Records for every prime p in [lo, hi] inclusive. Partitioned by p across
// jobs threads; the merged output is deterministic regardless of jobs.
scan_report scan_range(u64 lo, u64 hi, u64 seed, unsigned jobs);

// Empty iff the report and the reference agree on the (p, h) set, rho, v and
// factor multisets, restricted to reference rows with p inside the report's
// range. Each mismatch is one human-readable line.
std::vector<std::string> verify_against_reference(const scan_report& report,
                                                  const std::vector<structure_record>& reference);

// For every linear factor X + c: (-c)^d = 1 mod h with d = gcd(h-1, p-1).
// Vacuously true when no linear factor exists.
bool root_order_check(const structure_record& record);

// Serialization. CSV matches the reference fixture dialect; text mirrors the
// one-line print shape "p=..  h=..  rho=..  v=..  GCD(X)=..".
std::string record_csv_line(const structure_record& r);
std::string record_json_line(const structure_record& r);
std::string record_text_line(const structure_record& r);
inline const char* csv_header() { return "p,h,rho,v,factors"; }

// Parses the fixture dialect; throws with the 1-based line number on bad rows.
std::vector<structure_record> parse_reference_csv(const std::string& text);

// The reference table compiled into the library.
const std::vector<structure_record>& embedded_reference();

}  // namespace cyclo
