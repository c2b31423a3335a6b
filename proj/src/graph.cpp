#include "ttr/graph.hpp"

#include <algorithm>
#include <bit>
#include <queue>

#include "ttr/rational.hpp"

namespace ttr {

namespace {

void check_edge_list(int n, const std::vector<Edge>& edges) {
    for (const Edge& e : edges) {
        if (e.u < 0 || e.v >= n)
            throw ParameterError("edge endpoint out of range [0, n)");
    }
    for (std::size_t i = 1; i < edges.size(); ++i) {
        if (edges[i - 1] == edges[i]) throw ParameterError("duplicate edge");
    }
}

}  // namespace

PlainGraph::PlainGraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 0 || n > kMaxVertices) throw CapacityError("plain graph order out of range");
    std::sort(edges_.begin(), edges_.end());
    check_edge_list(n_, edges_);
}

int PlainGraph::degree(int v) const {
    int d = 0;
    for (const Edge& e : edges_) d += (e.u == v) + (e.v == v);
    return d;
}

bool PlainGraph::has_edge(int u, int v) const {
    if (u == v) return false;
    Edge probe(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), probe);
}

std::vector<std::uint32_t> PlainGraph::adjacency_rows() const {
    std::vector<std::uint32_t> rows(static_cast<std::size_t>(n_), 0);
    for (const Edge& e : edges_) {
        rows[static_cast<std::size_t>(e.u)] |= std::uint32_t{1} << e.v;
        rows[static_cast<std::size_t>(e.v)] |= std::uint32_t{1} << e.u;
    }
    return rows;
}

TwoTerminalGraph::TwoTerminalGraph(int n, std::vector<Edge> edges, int s, int t)
    : n_(n), s_(s), t_(t), edges_(std::move(edges)) {
    if (n < 2) throw ParameterError("a two-terminal graph needs at least 2 vertices");
    if (n > kMaxVertices) throw CapacityError("vertex count exceeds representation limit");
    if (s == t) throw ParameterError("terminals must be distinct");
    if (s < 0 || s >= n || t < 0 || t >= n) throw ParameterError("terminal id out of range");
    if (static_cast<int>(edges_.size()) > kMaxEdges)
        throw CapacityError("edge count exceeds representation limit");
    std::sort(edges_.begin(), edges_.end());
    check_edge_list(n_, edges_);
}

bool TwoTerminalGraph::has_edge(int u, int v) const { return edge_index(u, v) >= 0; }

int TwoTerminalGraph::edge_index(int u, int v) const {
    if (u == v) return -1;
    Edge probe(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), probe);
    if (it != edges_.end() && *it == probe) return static_cast<int>(it - edges_.begin());
    return -1;
}

int TwoTerminalGraph::degree(int v) const {
    int d = 0;
    for (const Edge& e : edges_) d += (e.u == v) + (e.v == v);
    return d;
}

std::vector<std::uint32_t> TwoTerminalGraph::adjacency_rows() const {
    std::vector<std::uint32_t> rows(static_cast<std::size_t>(n_), 0);
    for (const Edge& e : edges_) {
        rows[static_cast<std::size_t>(e.u)] |= std::uint32_t{1} << e.v;
        rows[static_cast<std::size_t>(e.v)] |= std::uint32_t{1} << e.u;
    }
    return rows;
}

std::vector<int> TwoTerminalGraph::common_neighbors_of_terminals() const {
    std::vector<int> out;
    for (int v = 0; v < n_; ++v) {
        if (v == s_ || v == t_) continue;
        if (has_edge(s_, v) && has_edge(v, t_)) out.push_back(v);
    }
    return out;
}

TwoTerminalGraph with_edges_replaced(const TwoTerminalGraph& g,
                                     const std::vector<Edge>& removed,
                                     const std::vector<Edge>& added) {
    std::vector<Edge> edges = g.edges();
    for (const Edge& e : removed) {
        auto it = std::find(edges.begin(), edges.end(), e);
        if (it == edges.end()) throw PreconditionError("edge to remove is absent");
        edges.erase(it);
    }
    for (const Edge& e : added) {
        if (std::find(edges.begin(), edges.end(), e) != edges.end())
            throw PreconditionError("edge to add is already present");
        edges.push_back(e);
    }
    return TwoTerminalGraph(g.n(), std::move(edges), g.s(), g.t());
}

TwoTerminalGraph construct_family_A(int n, int r) {
    if (n < 3) throw ParameterError("family A requires n >= 3");
    if (r < 0 || r > n - 3) throw ParameterError("family A requires 0 <= r <= n-3");
    std::vector<Edge> edges;
    edges.emplace_back(0, 1);
    for (int v = 2; v < n; ++v) {
        edges.emplace_back(0, v);
        edges.emplace_back(v, 1);
    }
    for (int j = 1; j <= r; ++j) edges.emplace_back(2, 2 + j);
    return TwoTerminalGraph(n, std::move(edges));
}

TwoTerminalGraph construct_family_H(int n, int m) {
    if (n < 5) throw ParameterError("family H requires n >= 5");
    if (m < 5 || m > 2 * n - 3) throw ParameterError("family H requires 5 <= m <= 2n-3");
    const int core = (m % 2 == 0) ? (m + 2) / 2 : (m + 3) / 2;
    const int r = (m % 2 == 0) ? 1 : 0;
    TwoTerminalGraph a = construct_family_A(core, r);
    return TwoTerminalGraph(n, a.edges());
}

TwoTerminalGraph construct_family_G(int n, int m, int n_prime_override) {
    if (n < 11 || m < 20 || m > 3 * n - 9)
        throw ParameterError("family G requires n >= 11 and 20 <= m <= 3n-9");
    const int np = n_prime_override > 0 ? n_prime_override : (m + 2) / 3 + 2;
    const int rp = m - 2 * np + 3;
    if (np < 3 || np > n || rp < 0 || rp > np - 3)
        throw ConstructionError("family G core is infeasible: r' = " + std::to_string(rp) +
                                " outside [0, n'-3] for n' = " + std::to_string(np));
    TwoTerminalGraph a = construct_family_A(np, rp);
    return TwoTerminalGraph(n, a.edges());
}

bool terminals_true_twins(const TwoTerminalGraph& g) {
    if (!g.has_edge(g.s(), g.t())) return false;
    for (int v = 0; v < g.n(); ++v) {
        if (v == g.s() || v == g.t()) continue;
        if (g.has_edge(g.s(), v) != g.has_edge(v, g.t())) return false;
    }
    return true;
}

bool terminals_universal(const TwoTerminalGraph& g) {
    return g.degree(g.s()) == g.n() - 1 && g.degree(g.t()) == g.n() - 1;
}

PlainGraph hat_graph(const TwoTerminalGraph& g) {
    std::vector<int> relabel(static_cast<std::size_t>(g.n()), -1);
    int next = 0;
    for (int v = 0; v < g.n(); ++v)
        if (v != g.s() && v != g.t()) relabel[static_cast<std::size_t>(v)] = next++;
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        int ru = relabel[static_cast<std::size_t>(e.u)];
        int rv = relabel[static_cast<std::size_t>(e.v)];
        if (ru >= 0 && rv >= 0) edges.emplace_back(ru, rv);
    }
    return PlainGraph(g.n() - 2, std::move(edges));
}

StructuralReport structural_predicates(const TwoTerminalGraph& g) {
    StructuralReport r;
    r.terminals_true_twins = terminals_true_twins(g);
    r.terminals_universal = terminals_universal(g);
    r.degrees.resize(static_cast<std::size_t>(g.n()), 0);
    for (const Edge& e : g.edges()) {
        ++r.degrees[static_cast<std::size_t>(e.u)];
        ++r.degrees[static_cast<std::size_t>(e.v)];
    }
    r.hat = hat_graph(g);
    for (int v = 0; v < g.n(); ++v)
        if (v != g.s() && v != g.t()) r.hat_to_orig.push_back(v);
    return r;
}

mpz_class count_p3(const PlainGraph& h) {
    mpz_class total = 0;
    for (int v = 0; v < h.n(); ++v)
        total += binomial(static_cast<unsigned long>(h.degree(v)), 2);
    return total;
}

namespace {

// Unit-capacity max flow (Edmonds-Karp on the n x n residual matrix).
int unit_max_flow(std::vector<std::vector<int>> cap, int src, int dst) {
    const int n = static_cast<int>(cap.size());
    int flow = 0;
    for (;;) {
        std::vector<int> parent(static_cast<std::size_t>(n), -1);
        parent[static_cast<std::size_t>(src)] = src;
        std::queue<int> q;
        q.push(src);
        while (!q.empty() && parent[static_cast<std::size_t>(dst)] < 0) {
            int v = q.front();
            q.pop();
            for (int w = 0; w < n; ++w) {
                if (parent[static_cast<std::size_t>(w)] < 0 &&
                    cap[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)] > 0) {
                    parent[static_cast<std::size_t>(w)] = v;
                    q.push(w);
                }
            }
        }
        if (parent[static_cast<std::size_t>(dst)] < 0) return flow;
        for (int v = dst; v != src; v = parent[static_cast<std::size_t>(v)]) {
            int p = parent[static_cast<std::size_t>(v)];
            --cap[static_cast<std::size_t>(p)][static_cast<std::size_t>(v)];
            ++cap[static_cast<std::size_t>(v)][static_cast<std::size_t>(p)];
        }
        ++flow;
    }
}

bool plain_connected(const PlainGraph& h) {
    if (h.n() <= 1) return true;
    auto rows = h.adjacency_rows();
    std::uint32_t reached = 1, frontier = 1;
    while (frontier) {
        std::uint32_t next = 0;
        std::uint32_t f = frontier;
        while (f) {
            int v = std::countr_zero(f);
            f &= f - 1;
            next |= rows[static_cast<std::size_t>(v)];
        }
        frontier = next & ~reached;
        reached |= next;
    }
    return std::popcount(reached) == h.n();
}

}  // namespace

int edge_connectivity(const PlainGraph& h) {
    if (h.n() <= 1) throw PreconditionError("edge connectivity undefined on K_1");
    if (!plain_connected(h)) return 0;
    std::vector<std::vector<int>> cap(
        static_cast<std::size_t>(h.n()),
        std::vector<int>(static_cast<std::size_t>(h.n()), 0));
    for (const Edge& e : h.edges()) {
        cap[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] = 1;
        cap[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] = 1;
    }
    int best = h.m();
    for (int v = 1; v < h.n(); ++v) best = std::min(best, unit_max_flow(cap, 0, v));
    return best;
}

bool almost_regular(const PlainGraph& h) {
    if (h.n() == 0) return true;
    int lo = h.n(), hi = 0;
    for (int v = 0; v < h.n(); ++v) {
        int d = h.degree(v);
        lo = std::min(lo, d);
        hi = std::max(hi, d);
    }
    return hi - lo <= 1;
}

}  // namespace ttr
