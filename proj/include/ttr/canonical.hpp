#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ttr/graph.hpp"

namespace ttr {

/// Canonical form of a two-terminal graph: the minimum upper-triangular
/// adjacency bit-string over all vertex permutations that preserve {s,t} as
/// a set. Equal codes <=> isomorphic as two-terminal graphs.
struct CanonicalCode {
    int n = 0;
    std::uint64_t code = 0;

    friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
    friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;

    std::string hex() const;
};

/// Row-major upper-triangle slot of pair {u,v}, u < v.
int pair_index(int u, int v, int n);

/// Adjacency bit word of a graph in pair-index order (n <= 11).
std::uint64_t adjacency_word(const TwoTerminalGraph& g);

/// Decodes an adjacency word back into a graph with terminals 0, 1.
TwoTerminalGraph graph_from_word(std::uint64_t word, int n);

/// Minimum adjacency word over the terminal-preserving permutation group.
std::uint64_t canonical_word(std::uint64_t word, int n);

/// Canonical code of g. Permutation search; throws CapacityError when
/// n exceeds the cap (default 10, hard ceiling 11).
CanonicalCode canonical_code(const TwoTerminalGraph& g, int n_cap = 10);

/// Canonical member of g's isomorphism class.
TwoTerminalGraph canonical_graph(const TwoTerminalGraph& g, int n_cap = 10);

/// Number of orbits of all edge sets under the terminal-preserving group,
/// by Burnside's lemma. Cross-check for the enumerator on tiny n.
mpz_class burnside_total_classes(int n);

}  // namespace ttr
