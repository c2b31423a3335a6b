#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "ttr/errors.hpp"

namespace ttr {

// Representation limits: vertex sets fit a 32-bit row mask, edge sets a
// 64-bit subset mask. Everything in this tool is desk scale.
inline constexpr int kMaxVertices = 31;
inline constexpr int kMaxEdges = 63;

/// Unordered vertex pair, stored with u < v.
struct Edge {
    int u = 0;
    int v = 1;

    Edge() = default;
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {
        if (a == b) throw ParameterError("edge endpoints must be distinct");
    }

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Subset of the edge indices of a fixed graph; bit i refers to edge i.
struct EdgeSubset {
    std::uint64_t mask = 0;
};

/// Simple undirected graph without terminals (used for hat graphs).
class PlainGraph {
public:
    PlainGraph() = default;
    PlainGraph(int n, std::vector<Edge> edges);

    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    int degree(int v) const;
    bool has_edge(int u, int v) const;
    std::vector<std::uint32_t> adjacency_rows() const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
};

/// Simple graph with two distinguished terminal vertices. Immutable after
/// construction; the edge order fixed at construction is the stable indexing
/// that all subset masks refer to. Canonical storage keeps terminals at 0, 1
/// and edges sorted lexicographically.
class TwoTerminalGraph {
public:
    TwoTerminalGraph(int n, std::vector<Edge> edges, int s = 0, int t = 1);

    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }
    int s() const { return s_; }
    int t() const { return t_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int i) const { return edges_[static_cast<std::size_t>(i)]; }

    bool has_edge(int u, int v) const;
    /// Index of edge {u,v}, or -1 when absent.
    int edge_index(int u, int v) const;
    int degree(int v) const;
    std::uint64_t full_mask() const { return m() == 0 ? 0 : (~std::uint64_t{0} >> (64 - m())); }

    /// Adjacency bit rows over all edges (row v has bit w set iff vw is an edge).
    std::vector<std::uint32_t> adjacency_rows() const;

    /// Non-terminal vertices adjacent to both terminals, ascending.
    std::vector<int> common_neighbors_of_terminals() const;

    friend bool operator==(const TwoTerminalGraph&, const TwoTerminalGraph&) = default;

private:
    int n_ = 2;
    int s_ = 0;
    int t_ = 1;
    std::vector<Edge> edges_;
};

/// Derived graph value: result of deleting / adding edges while keeping n.
TwoTerminalGraph with_edges_replaced(const TwoTerminalGraph& g,
                                     const std::vector<Edge>& removed,
                                     const std::vector<Edge>& added);

// ---- named families ----------------------------------------------------

/// Family A: terminals joined by an edge and by n-2 disjoint two-edge paths,
/// with r chords fanned out of the first interior vertex. m = 2n-3+r.
TwoTerminalGraph construct_family_A(int n, int r);

/// Family H: the m-edge member of family A that maximizes interior paths,
/// padded with isolated vertices up to n. Every terminal-to-terminal path
/// has length at most 3. Requires n >= 5 and 5 <= m <= 2n-3.
TwoTerminalGraph construct_family_H(int n, int m);

/// Family G: a dense small family-A core plus isolated padding, used as the
/// crossing witness in class searches. The core order defaults to
/// ceil(m/3)+2, which keeps the chord count r' = m-2n'+3 inside [0, n'-3]
/// throughout the window n >= 11, 20 <= m <= 3n-9; pass n_prime_override to
/// probe other core sizes.
TwoTerminalGraph construct_family_G(int n, int m, int n_prime_override = -1);

// ---- structural predicates ----------------------------------------------

struct StructuralReport {
    bool terminals_true_twins = false;
    bool terminals_universal = false;
    std::vector<int> degrees;
    PlainGraph hat;                 // G - s - t with vertices relabeled 0..n-3
    std::vector<int> hat_to_orig;   // hat vertex id -> original vertex id
};

StructuralReport structural_predicates(const TwoTerminalGraph& g);

bool terminals_true_twins(const TwoTerminalGraph& g);
bool terminals_universal(const TwoTerminalGraph& g);
PlainGraph hat_graph(const TwoTerminalGraph& g);

/// Number of paths on three vertices: sum over v of C(deg(v), 2).
mpz_class count_p3(const PlainGraph& h);

/// Edge connectivity; 0 for disconnected graphs. Undefined on K_1.
int edge_connectivity(const PlainGraph& h);

/// All vertex degrees within one of each other.
bool almost_regular(const PlainGraph& h);

}  // namespace ttr
