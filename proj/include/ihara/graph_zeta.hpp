#pragma once

// Ihara zeta functions of finite multigraphs: the non-backtracking edge
// operator, two independent determinant formulas for zeta^{-1}, exact cycle
// counts with Moebius inversion, and prime-geodesic ratio diagnostics.

#include "ihara/arith.hpp"
#include "ihara/int_matrix.hpp"
#include "ihara/polynomial.hpp"

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ihara::graph {

// Parallel edges allowed, loops are not.
struct multigraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
};

// Raised when a vertex breaks a structural precondition (loop, degree < 2).
struct graph_domain_error : std::domain_error {
    graph_domain_error(const std::string& what, int vertex)
        : std::domain_error(what), vertex(vertex) {}
    int vertex;
};

// Directed-edge view: edge i yields directed edges 2i (u->v) and 2i+1 (v->u);
// the reversal involution is index xor 1.
struct oriented_edges {
    std::vector<int> tail, head;  // size 2m
    static oriented_edges from(const multigraph& g);
    int bar(int e) const { return e ^ 1; }
    int size() const { return static_cast<int>(tail.size()); }
};

std::vector<int> degrees(const multigraph& g);
// Throws graph_domain_error naming the offending vertex.
void require_md2(const multigraph& g);
bool is_connected(const multigraph& g);
bool is_bipartite(const multigraph& g);
// q with g (q+1)-regular, or nullopt.
std::optional<int> regular_degree_q(const multigraph& g);

// {"n": <int>, "edges": [[u,v], ...]}; throws std::invalid_argument on
// malformed input, graph_domain_error on loops.
multigraph load_graph_json(std::istream& in);
multigraph load_graph_file(const std::string& path);

// W[e][f] = 1 iff head(e) = tail(f) and f != reversal(e). Requires md2.
int_matrix hashimoto(const multigraph& g);

// det(I - uW), exact, via Bareiss determinants at 2m+1 integer points and
// exact interpolation.
int_polynomial zeta_inverse_hashimoto(const multigraph& g);

// (1 - u^2)^(m-n) det(I - Au + Qu^2), Q = Deg - I.
int_polynomial zeta_inverse_bass(const multigraph& g);

struct cycle_count_table {
    unsigned m_max = 0;
    std::map<unsigned, Int> N;           // closed non-backtracking tailless paths
    std::map<unsigned, Int> pi;          // primitive cycles, by Moebius inversion
    std::optional<int> q;                // graph is (q+1)-regular
    std::optional<unsigned> delta;       // gcd{m : pi(m) > 0}, if any pi > 0
};

// Exact N_m = trace(W^m) and pi(m) for 1 <= m <= m_max.
cycle_count_table cycle_counts(const multigraph& g, unsigned m_max);

// Independent oracle: depth-first enumeration of closed non-backtracking
// tailless edge sequences. Exponential; small m only.
Int brute_force_N(const multigraph& g, unsigned m);

struct pgt_row {
    unsigned m = 0;
    Int pi;
    Rat ratio;              // pi(m) * m / q^m, exact
    std::string ratio_dec;  // 6-place rendering
};

// Requires g connected and regular; throws std::domain_error otherwise.
pgt_row pgt_ratio(const multigraph& g, unsigned m);
pgt_row pgt_ratio_from(const cycle_count_table& t, unsigned m);

}  // namespace ihara::graph
