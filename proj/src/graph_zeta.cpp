#include "ihara/graph_zeta.hpp"

#include "json.hpp"

#include <algorithm>
#include <fstream>
#include <queue>

namespace ihara::graph {

namespace {

void validate_structure(const multigraph& g) {
    if (g.n < 0) throw std::invalid_argument("graph: negative vertex count");
    for (auto [u, v] : g.edges) {
        if (u < 0 || v < 0 || u >= g.n || v >= g.n)
            throw std::invalid_argument("graph: edge endpoint out of range");
        if (u == v) throw graph_domain_error("graph: loop at vertex " + std::to_string(u), u);
    }
}

}  // namespace

oriented_edges oriented_edges::from(const multigraph& g) {
    validate_structure(g);
    oriented_edges oe;
    oe.tail.reserve(2 * g.edges.size());
    oe.head.reserve(2 * g.edges.size());
    for (auto [u, v] : g.edges) {
        oe.tail.push_back(u);
        oe.head.push_back(v);
        oe.tail.push_back(v);
        oe.head.push_back(u);
    }
    return oe;
}

std::vector<int> degrees(const multigraph& g) {
    std::vector<int> deg(g.n, 0);
    for (auto [u, v] : g.edges) {
        ++deg[u];
        ++deg[v];
    }
    return deg;
}

void require_md2(const multigraph& g) {
    validate_structure(g);
    auto deg = degrees(g);
    for (int v = 0; v < g.n; ++v)
        if (deg[v] < 2)
            throw graph_domain_error("graph: vertex " + std::to_string(v) + " has degree " +
                                         std::to_string(deg[v]) + " < 2",
                                     v);
}

bool is_connected(const multigraph& g) {
    if (g.n == 0) return true;
    std::vector<std::vector<int>> adj(g.n);
    for (auto [u, v] : g.edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<char> seen(g.n, 0);
    std::queue<int> bfs;
    bfs.push(0);
    seen[0] = 1;
    int count = 1;
    while (!bfs.empty()) {
        int u = bfs.front();
        bfs.pop();
        for (int w : adj[u])
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                bfs.push(w);
            }
    }
    return count == g.n;
}

bool is_bipartite(const multigraph& g) {
    std::vector<std::vector<int>> adj(g.n);
    for (auto [u, v] : g.edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<int> color(g.n, -1);
    for (int s = 0; s < g.n; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::queue<int> bfs;
        bfs.push(s);
        while (!bfs.empty()) {
            int u = bfs.front();
            bfs.pop();
            for (int w : adj[u]) {
                if (color[w] == -1) {
                    color[w] = 1 - color[u];
                    bfs.push(w);
                } else if (color[w] == color[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

std::optional<int> regular_degree_q(const multigraph& g) {
    auto deg = degrees(g);
    if (deg.empty()) return std::nullopt;
    for (int d : deg)
        if (d != deg[0]) return std::nullopt;
    return deg[0] - 1;
}

multigraph load_graph_json(std::istream& in) {
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("graph file: invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("edges") ||
        !j["n"].is_number_integer() || !j["edges"].is_array())
        throw std::invalid_argument("graph file: expected {\"n\": int, \"edges\": [[u,v],...]}");
    multigraph g;
    g.n = j["n"].get<int>();
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw std::invalid_argument("graph file: each edge must be [u,v]");
        g.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    validate_structure(g);
    return g;
}

multigraph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("graph file: cannot open " + path);
    return load_graph_json(in);
}

int_matrix hashimoto(const multigraph& g) {
    require_md2(g);
    oriented_edges oe = oriented_edges::from(g);
    const int E = oe.size();
    int_matrix W(static_cast<std::size_t>(E));
    for (int e = 0; e < E; ++e)
        for (int f = 0; f < E; ++f)
            if (oe.head[e] == oe.tail[f] && f != oe.bar(e)) W.at(e, f) = 1;
    return W;
}

int_polynomial zeta_inverse_hashimoto(const multigraph& g) {
    int_matrix W = hashimoto(g);
    const std::size_t E = W.size();
    // det(I - uW) has degree <= E; evaluate at E+1 integer points
    std::vector<Int> xs, ys;
    for (std::size_t i = 0; i <= E; ++i) {
        Int u = Int(i) - Int(E / 2);
        int_matrix M = int_matrix::identity(E);
        for (std::size_t r = 0; r < E; ++r)
            for (std::size_t c = 0; c < E; ++c)
                if (W.at(r, c) != 0) M.at(r, c) -= u * W.at(r, c);
        xs.push_back(u);
        ys.push_back(bareiss_determinant(std::move(M)));
    }
    return interpolate_integer_polynomial(xs, ys);
}

int_polynomial zeta_inverse_bass(const multigraph& g) {
    require_md2(g);
    const int n = g.n;
    const int m = static_cast<int>(g.edges.size());
    int_matrix A(static_cast<std::size_t>(n));
    for (auto [u, v] : g.edges) {
        A.at(u, v) += 1;
        A.at(v, u) += 1;
    }
    auto deg = degrees(g);
    // det(I - Au + Qu^2) has degree <= 2n
    std::vector<Int> xs, ys;
    for (int i = 0; i <= 2 * n; ++i) {
        Int u = Int(i) - Int(n);
        int_matrix M = int_matrix::identity(static_cast<std::size_t>(n));
        for (int r = 0; r < n; ++r) {
            for (int c = 0; c < n; ++c)
                if (A.at(r, c) != 0) M.at(r, c) -= u * A.at(r, c);
            M.at(r, r) += u * u * (deg[r] - 1);
        }
        xs.push_back(u);
        ys.push_back(bareiss_determinant(std::move(M)));
    }
    int_polynomial det3 = interpolate_integer_polynomial(xs, ys);
    // (1 - u^2)^(m - n); md2 implies m >= n
    int_polynomial one_minus_u2({1, 0, -1});
    return one_minus_u2.pow(static_cast<unsigned>(m - n)) * det3;
}

cycle_count_table cycle_counts(const multigraph& g, unsigned m_max) {
    if (m_max < 1) throw std::invalid_argument("cycle_counts: m_max must be positive");
    int_matrix W = hashimoto(g);
    cycle_count_table t;
    t.m_max = m_max;
    t.q = regular_degree_q(g);
    int_matrix P = int_matrix::identity(W.size());
    for (unsigned m = 1; m <= m_max; ++m) {
        P = P * W;
        t.N[m] = P.trace();
    }
    for (unsigned m = 1; m <= m_max; ++m) {
        Int s = 0;
        for (unsigned d = 1; d <= m; ++d) {
            if (m % d != 0) continue;
            s += Int(moebius(Int(m / d))) * t.N[d];
        }
        if (s % m != 0) throw std::logic_error("cycle_counts: inversion not divisible by m");
        Int pi = s / m;
        if (pi < 0) throw std::logic_error("cycle_counts: negative primitive count");
        t.pi[m] = pi;
    }
    unsigned delta = 0;
    for (auto& [m, pi] : t.pi)
        if (pi > 0) delta = std::gcd(delta, m);
    if (delta > 0) t.delta = delta;
    return t;
}

Int brute_force_N(const multigraph& g, unsigned m) {
    if (m < 1) throw std::invalid_argument("brute_force_N: m must be positive");
    require_md2(g);
    oriented_edges oe = oriented_edges::from(g);
    const int E = oe.size();
    std::vector<std::vector<int>> next(E);
    for (int e = 0; e < E; ++e)
        for (int f = 0; f < E; ++f)
            if (oe.head[e] == oe.tail[f] && f != oe.bar(e)) next[e].push_back(f);
    Int count = 0;
    // walk[0..m-1], cyclically non-backtracking, closed
    std::vector<int> walk(m);
    auto dfs = [&](auto&& self, unsigned depth) -> void {
        if (depth == m) {
            int last = walk[m - 1], first = walk[0];
            if (oe.head[last] == oe.tail[first] && first != oe.bar(last)) ++count;
            return;
        }
        for (int f : next[walk[depth - 1]]) {
            walk[depth] = f;
            self(self, depth + 1);
        }
    };
    for (int e = 0; e < E; ++e) {
        walk[0] = e;
        if (m == 1) {
            if (oe.head[e] == oe.tail[e] && e != oe.bar(e)) ++count;
        } else {
            dfs(dfs, 1);
        }
    }
    return count;
}

pgt_row pgt_ratio_from(const cycle_count_table& t, unsigned m) {
    if (!t.q) throw std::domain_error("pgt_ratio: graph is not regular");
    if (m < 1 || m > t.m_max) throw std::invalid_argument("pgt_ratio: m out of range");
    pgt_row row;
    row.m = m;
    row.pi = t.pi.at(m);
    Int qm = 1;
    for (unsigned i = 0; i < m; ++i) qm *= *t.q;
    row.ratio = Rat(row.pi * m, qm);
    row.ratio_dec = decimal_string(row.ratio);
    return row;
}

pgt_row pgt_ratio(const multigraph& g, unsigned m) {
    if (!regular_degree_q(g)) throw std::domain_error("pgt_ratio: graph is not regular");
    if (!is_connected(g)) throw std::domain_error("pgt_ratio: graph is not connected");
    return pgt_ratio_from(cycle_counts(g, m), m);
}

}  // namespace ihara::graph
