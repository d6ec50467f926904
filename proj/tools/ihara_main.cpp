// Command-line surface over the exact engines: zeta polynomials, cycle
// counts, class groups, order enumeration and the asymptotic verifier.
//
// Exit codes: 0 success, 2 usage/config error, 3 domain precondition
// violation (bad graph structure, inert prime, ...).

#include "CLI11.hpp"

#include "ihara/arith.hpp"
#include "ihara/graph_zeta.hpp"
#include "ihara/quad_orders.hpp"
#include "ihara/verify.hpp"

#include <fstream>
#include <iostream>

namespace {

using ihara::Int;

Int parse_int(const std::string& s) {
    try {
        return Int(s);
    } catch (const std::exception&) {
        throw std::invalid_argument("not an integer: '" + s + "'");
    }
}

std::vector<Int> parse_set(const std::vector<std::string>& items) {
    std::vector<Int> out;
    for (const auto& s : items) out.push_back(parse_int(s));
    return out;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file: " + path);
    out << content;
}

int run_zeta(const std::string& graph_path, const std::string& formula) {
    auto g = ihara::graph::load_graph_file(graph_path);
    if (formula == "hashimoto") {
        std::cout << ihara::graph::zeta_inverse_hashimoto(g).to_string() << "\n";
    } else if (formula == "bass") {
        std::cout << ihara::graph::zeta_inverse_bass(g).to_string() << "\n";
    } else {
        auto zh = ihara::graph::zeta_inverse_hashimoto(g);
        auto zb = ihara::graph::zeta_inverse_bass(g);
        std::cout << "hashimoto: " << zh.to_string() << "\n";
        std::cout << "bass: " << zb.to_string() << "\n";
        std::cout << "verdict: " << (zh == zb ? "EQUAL" : "DIFFER") << "\n";
    }
    return 0;
}

int run_cycles(const std::string& graph_path, unsigned m_max) {
    auto g = ihara::graph::load_graph_file(graph_path);
    std::cerr << "# cycles: graph=" << graph_path << " m_max=" << m_max << "\n";
    auto t = ihara::graph::cycle_counts(g, m_max);
    const bool with_ratio = t.q.has_value() && ihara::graph::is_connected(g);
    std::cout << (with_ratio ? "m,N_m,pi_m,ratio\n" : "m,N_m,pi_m\n");
    for (unsigned m = 1; m <= m_max; ++m) {
        std::cout << m << "," << t.N.at(m).str() << "," << t.pi.at(m).str();
        if (with_ratio) std::cout << "," << ihara::graph::pgt_ratio_from(t, m).ratio_dec;
        std::cout << "\n";
    }
    return 0;
}

int run_classgroup(const std::string& d_str) {
    Int D = parse_int(d_str);
    auto d = ihara::quad::decompose_discriminant(D);
    auto cg = ihara::quad::reduced_forms(d);
    std::cout << "D: " << d.D.str() << " (d_F=" << d.d_F.str() << ", f=" << d.f.str() << ")\n";
    std::cout << "h: " << cg.h.str() << "\n";
    std::cout << "forms:\n";
    for (std::size_t i = 0; i < cg.forms.size(); ++i) {
        const auto& f = cg.forms[i];
        std::cout << "  " << i << ": (" << f.a.str() << "," << f.b.str() << "," << f.c.str()
                  << ")\n";
    }
    std::cout << "composition table (entry [i][j] = index of class i * class j):\n";
    for (const auto& fi : cg.forms) {
        std::cout << " ";
        for (const auto& fj : cg.forms) {
            auto prod = ihara::quad::compose(fi, fj);
            auto it = std::lower_bound(cg.forms.begin(), cg.forms.end(), prod);
            std::cout << " " << (it - cg.forms.begin());
        }
        std::cout << "\n";
    }
    return 0;
}

std::string lp_cell(const ihara::quad::norm_length& l) {
    if (l.finite()) return std::to_string(*l.k);
    return "inf@" + std::to_string(l.cap);
}

int run_orders(const std::vector<std::string>& S_str, const std::string& p_str,
               const std::string& bound_str, unsigned k_cap, const std::string& out_path,
               unsigned threads) {
    auto S = parse_set(S_str);
    Int p = parse_int(p_str);
    Int bound = parse_int(bound_str);
    std::cerr << "# orders: p=" << p.str() << " S=";
    for (std::size_t i = 0; i < S.size(); ++i) std::cerr << (i ? "," : "") << S[i].str();
    std::cerr << " d_bound=" << bound.str() << " k_cap=" << k_cap << " threads=" << threads
              << "\n";
    auto rows = ihara::quad::enumerate_L_S(S, p, bound, k_cap, threads);
    std::string csv = "D,d_F,f,h,f_S,l_p,h_inv\n";
    for (const auto& r : rows) {
        csv += r.D.D.str() + "," + r.D.d_F.str() + "," + r.D.f.str() + "," + r.h.str() + "," +
               r.f_S.str() + "," + lp_cell(r.l_p) + "," + r.h_inv.str() + "\n";
    }
    if (out_path.empty())
        std::cout << csv;
    else
        write_file(out_path, csv);
    return 0;
}

int run_verify(const std::vector<std::string>& S_str, const std::string& p_str, unsigned m_max,
               unsigned k_cap, const std::string& scan_str, unsigned delta_override,
               const std::string& out_base, const std::string& format, unsigned threads) {
    ihara::verify::verification_config cfg;
    cfg.p = parse_int(p_str);
    cfg.S = parse_set(S_str);
    cfg.m_max = m_max;
    if (k_cap > 0) cfg.k_cap = k_cap;
    if (!scan_str.empty()) cfg.scan_bound = parse_int(scan_str);
    if (delta_override > 0) cfg.delta_override = delta_override;
    for (const Int& l : cfg.S)
        if (l == cfg.p) throw std::invalid_argument("verify: p must not lie in S");

    bool mod12 = false;
    for (const Int& l : cfg.S)
        if (l % 12 == 1) mod12 = true;
    if (!mod12)
        std::cerr << "warning: no l in S with l = 1 mod 12; the asymptotic statement's "
                     "hypotheses are not met, results are exploratory\n";

    auto rep = ihara::verify::asymptotic_report(cfg, threads);
    if (format == "csv" || format == "both")
        write_file(out_base + ".csv", ihara::verify::report_csv(rep));
    if (format == "json" || format == "both")
        write_file(out_base + ".json", ihara::verify::report_json(rep));

    const auto& top = rep.rows.back();
    std::cout << "delta: " << rep.delta << (rep.delta_overridden ? " (override)" : "") << "\n";
    std::cout << "top row m=" << top.m << ": T=" << top.T.str() << " ratio=" << top.ratio
              << " liminf_diag=" << top.liminf_diag << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Ihara zeta / quadratic order verification toolkit"};
    app.set_version_flag("--version", ihara::verify::tool_version);
    unsigned threads = 1;
    app.add_option("--threads", threads, "parallelism ceiling (output is thread-count invariant)")
        ->capture_default_str();
    app.require_subcommand(1);

    auto* zeta = app.add_subcommand("zeta", "zeta^{-1} polynomial of a graph");
    std::string graph_path, formula = "both";
    zeta->add_option("--graph", graph_path, "graph JSON file")->required();
    zeta->add_option("--formula", formula, "bass | hashimoto | both")
        ->check(CLI::IsMember({"bass", "hashimoto", "both"}))
        ->capture_default_str();

    auto* cycles = app.add_subcommand("cycles", "cycle count table N_m, pi(m)");
    std::string cycles_graph;
    unsigned cycles_mmax = 1;
    cycles->add_option("--graph", cycles_graph, "graph JSON file")->required();
    cycles->add_option("--m-max", cycles_mmax, "largest cycle length")->required();

    auto* cg = app.add_subcommand("classgroup", "reduced forms and composition table");
    std::string d_str;
    cg->add_option("--discriminant", d_str, "negative discriminant, e.g. --discriminant=-23")
        ->required();

    auto* orders = app.add_subcommand("orders", "enumerate admissible order classes");
    std::vector<std::string> S_str;
    std::string p_str, bound_str, orders_out;
    unsigned orders_kcap = 30;
    orders->add_option("--p", p_str, "prime p")->required();
    orders->add_option("--S", S_str, "comma-separated primes of S")->required()->delimiter(',');
    orders->add_option("--d-bound", bound_str, "enumerate |D| up to this bound")->required();
    orders->add_option("--k-cap", orders_kcap, "l_p search cap")->capture_default_str();
    orders->add_option("--output", orders_out, "write CSV here instead of stdout");

    auto* verify = app.add_subcommand("verify", "asymptotic verification report");
    std::vector<std::string> vS_str;
    std::string vp_str, scan_str, out_base = "report", vformat = "both";
    unsigned vmmax = 1, vkcap = 0, vdelta = 0;
    verify->add_option("--p", vp_str, "prime p")->required();
    verify->add_option("--S", vS_str, "comma-separated primes of S")->required()->delimiter(',');
    verify->add_option("--m-max", vmmax, "rows m = 1..m_max")->required();
    verify->add_option("--k-cap", vkcap, "l_p search cap (default delta*m_max+4)");
    verify->add_option("--scan-bound", scan_str, "discriminant bound of the delta scan");
    verify->add_option("--delta-override", vdelta, "skip the delta scan");
    verify->add_option("--output", out_base, "output base path (writes .csv / .json)")
        ->capture_default_str();
    verify->add_option("--format", vformat, "csv | json | both")
        ->check(CLI::IsMember({"csv", "json", "both"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
        if (zeta->parsed()) return run_zeta(graph_path, formula);
        if (cycles->parsed()) return run_cycles(cycles_graph, cycles_mmax);
        if (cg->parsed()) return run_classgroup(d_str);
        if (orders->parsed())
            return run_orders(S_str, p_str, bound_str, orders_kcap, orders_out, threads);
        if (verify->parsed())
            return run_verify(vS_str, vp_str, vmmax, vkcap, scan_str, vdelta, out_base, vformat,
                              threads);
        return 2;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const ihara::graph::graph_domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
