#pragma once

// Joins the arithmetic engine to the asymptotic statement: computes the
// length gcd Delta, the exact stratum sums T_m = sum f_S * h_inv over
// classes with l_p = Delta*m, target/ratio tables, and the class-number-sum
// diagnostic, with bit-exact CSV and JSON renderings.

#include "ihara/arith.hpp"
#include "ihara/quad_orders.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ihara::verify {

inline constexpr const char* tool_version = "0.1.0";

struct verification_config {
    Int p;
    std::vector<Int> S;
    unsigned m_max = 1;
    std::optional<unsigned> k_cap;        // default: delta * m_max + 4
    std::optional<unsigned> delta_override;
    std::optional<Int> scan_bound;        // default: min(4 p^6, 65536)
};

struct report_row {
    unsigned m = 0;
    Int T;
    Int target_num, target_den;  // p^(delta m) / (2m), unreduced
    std::string ratio;           // T * 2m / p^(delta m), 6 decimals
    Int h_sum;                   // sum of h(O) over the same stratum
    std::string liminf_diag;     // m * h_sum / p^(delta m), 6 decimals
    Int d_bound;                 // 4 p^(delta m)
    Int n_classes;               // contributing classes
};

struct verification_report {
    unsigned delta = 1;
    bool delta_overridden = false;
    unsigned k_cap = 0;
    std::optional<Int> scan_bound;  // absent when delta was overridden
    bool mod12_hypothesis = false;  // some l in S with l = 1 mod 12
    verification_config cfg;
    std::vector<report_row> rows;
};

Int default_scan_bound(const Int& p);

// gcd of all finite l_p over the enumeration up to scan_bound; throws
// std::invalid_argument if scan_bound < 4p, std::runtime_error if no
// finite l_p is found. Returns delta_override when set.
unsigned compute_delta(const verification_config& cfg, const Int& scan_bound,
                       unsigned threads = 1);

// Exact T_m over D_bound = 4 p^(delta m); requires delta*m <= k_cap.
Int theorem_sum(const verification_config& cfg, unsigned delta, unsigned m,
                unsigned threads = 1);

verification_report asymptotic_report(const verification_config& cfg, unsigned threads = 1);

// CSV with header m,T_m,target_num,target_den,ratio,h_sum,liminf_diag (LF
// line endings). The JSON mirror stores the identical row cells as strings
// plus the full provenance block.
std::string report_csv(const verification_report& r);
std::string report_json(const verification_report& r);

}  // namespace ihara::verify
