#include "ihara/verify.hpp"

#include "json.hpp"

#include <algorithm>

namespace ihara::verify {

namespace {

using quad::splitting;

Int pow_int(const Int& b, unsigned e) {
    Int r = 1;
    for (unsigned i = 0; i < e; ++i) r *= b;
    return r;
}

unsigned k_cap_of(const verification_config& cfg, unsigned delta) {
    unsigned cap = cfg.k_cap ? *cfg.k_cap : delta * cfg.m_max + 4;
    if (cap < delta * cfg.m_max)
        throw std::invalid_argument("verify: k_cap below delta * m_max");
    return cap;
}

struct stratum_sums {
    Int T = 0;
    Int h_sum = 0;
    Int n_classes = 0;
};

// Classes with l_p exactly delta*m inside |D| <= 4 p^(delta m). Capped
// infinity markers are re-certified through the class-order criterion
// before they are excluded.
stratum_sums row_sums(const verification_config& cfg, unsigned delta, unsigned m,
                      unsigned k_cap, unsigned threads) {
    const unsigned target = delta * m;
    if (target > k_cap) throw std::invalid_argument("verify: delta*m exceeds k_cap");
    const Int d_bound = 4 * pow_int(cfg.p, target);
    auto classes = quad::enumerate_L_S(cfg.S, cfg.p, d_bound, k_cap, threads);
    stratum_sums out;
    for (const auto& row : classes) {
        if (!row.l_p.finite()) {
            // certify the exclusion: inert stays infinite for D < -4 (and
            // the unit cases -3, -4 always yield l_p <= 2 < cap); ramified
            // non-principal stays infinite; a split class must have its
            // order beyond the cap
            int kr = kronecker(row.D.D, cfg.p);
            if (kr == 1) {
                Int ord = quad::class_order_of_prime(row.D, cfg.p);
                if (ord <= k_cap)
                    throw std::logic_error("verify: capped l_p contradicts class order");
            }
            continue;
        }
        if (*row.l_p.k != target) continue;
        out.T += row.f_S * row.h_inv;
        out.h_sum += row.h;
        out.n_classes += 1;
    }
    return out;
}

}  // namespace

Int default_scan_bound(const Int& p) {
    Int b = 4 * pow_int(p, 6);
    return b < 65536 ? b : Int(65536);
}

unsigned compute_delta(const verification_config& cfg, const Int& scan_bound,
                       unsigned threads) {
    if (cfg.delta_override) {
        if (*cfg.delta_override < 1)
            throw std::invalid_argument("compute_delta: override must be positive");
        return *cfg.delta_override;
    }
    if (scan_bound < 4 * cfg.p)
        throw std::invalid_argument("compute_delta: scan_bound below 4p");
    const unsigned cap = cfg.k_cap ? *cfg.k_cap : cfg.m_max + 4;
    auto classes = quad::enumerate_L_S(cfg.S, cfg.p, scan_bound, cap, threads);
    std::vector<Int> finite;
    for (const auto& row : classes)
        if (row.l_p.finite()) finite.push_back(Int(*row.l_p.k));
    if (finite.empty())
        throw std::runtime_error(
            "compute_delta: no finite l_p in scan (scan_bound or k_cap too small)");
    return static_cast<unsigned>(gcd_all(finite));
}

Int theorem_sum(const verification_config& cfg, unsigned delta, unsigned m,
                unsigned threads) {
    if (delta < 1 || m < 1) throw std::invalid_argument("theorem_sum: delta, m must be positive");
    return row_sums(cfg, delta, m, k_cap_of(cfg, delta), threads).T;
}

verification_report asymptotic_report(const verification_config& cfg, unsigned threads) {
    if (cfg.m_max < 1) throw std::invalid_argument("asymptotic_report: m_max must be positive");
    verification_report rep;
    rep.cfg = cfg;
    rep.delta_overridden = cfg.delta_override.has_value();
    if (!rep.delta_overridden) rep.scan_bound = cfg.scan_bound ? *cfg.scan_bound : default_scan_bound(cfg.p);
    rep.delta = compute_delta(cfg, rep.scan_bound ? *rep.scan_bound : Int(0), threads);
    rep.k_cap = k_cap_of(cfg, rep.delta);
    rep.mod12_hypothesis =
        std::any_of(cfg.S.begin(), cfg.S.end(), [](const Int& l) { return l % 12 == 1; });
    for (unsigned m = 1; m <= cfg.m_max; ++m) {
        stratum_sums s = row_sums(cfg, rep.delta, m, rep.k_cap, threads);
        report_row row;
        row.m = m;
        row.T = s.T;
        row.target_num = pow_int(cfg.p, rep.delta * m);
        row.target_den = 2 * m;
        row.ratio = decimal_string(Rat(s.T * 2 * m, row.target_num));
        row.h_sum = s.h_sum;
        row.liminf_diag = decimal_string(Rat(s.h_sum * m, row.target_num));
        row.d_bound = 4 * row.target_num;
        row.n_classes = s.n_classes;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

std::string report_csv(const verification_report& r) {
    std::string out = "m,T_m,target_num,target_den,ratio,h_sum,liminf_diag\n";
    for (const auto& row : r.rows) {
        out += std::to_string(row.m);
        out += "," + row.T.str();
        out += "," + row.target_num.str();
        out += "," + row.target_den.str();
        out += "," + row.ratio;
        out += "," + row.h_sum.str();
        out += "," + row.liminf_diag;
        out += "\n";
    }
    return out;
}

std::string report_json(const verification_report& r) {
    nlohmann::ordered_json j;
    nlohmann::ordered_json prov;
    prov["tool"] = "ihara";
    prov["version"] = tool_version;
    nlohmann::ordered_json cfg;
    cfg["p"] = r.cfg.p.str();
    std::vector<std::string> sv;
    for (const Int& l : r.cfg.S) sv.push_back(l.str());
    cfg["S"] = sv;
    cfg["m_max"] = r.cfg.m_max;
    if (r.cfg.k_cap) cfg["k_cap"] = *r.cfg.k_cap;
    if (r.cfg.delta_override) cfg["delta_override"] = *r.cfg.delta_override;
    if (r.cfg.scan_bound) cfg["scan_bound"] = r.cfg.scan_bound->str();
    prov["config"] = cfg;
    prov["delta"] = r.delta;
    prov["delta_overridden"] = r.delta_overridden;
    prov["k_cap"] = r.k_cap;
    if (r.scan_bound) prov["scan_bound"] = r.scan_bound->str();
    prov["mod12_hypothesis_met"] = r.mod12_hypothesis;
    j["provenance"] = prov;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : r.rows) {
        nlohmann::ordered_json jr;
        jr["m"] = std::to_string(row.m);
        jr["T_m"] = row.T.str();
        jr["target_num"] = row.target_num.str();
        jr["target_den"] = row.target_den.str();
        jr["ratio"] = row.ratio;
        jr["h_sum"] = row.h_sum.str();
        jr["liminf_diag"] = row.liminf_diag;
        jr["d_bound"] = row.d_bound.str();
        jr["n_classes"] = row.n_classes.str();
        rows.push_back(jr);
    }
    j["rows"] = rows;
    return j.dump(2) + "\n";
}

}  // namespace ihara::verify
