#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "ttr/graph.hpp"

namespace ttr {

/// Exact pathset census of a fixed graph at distance bound d:
/// counts[i-1] is the number of i-edge spanning subgraphs in which the
/// terminals are joined by a path of length at most d.
struct CensusVector {
    int d = 0;
    int m = 0;
    std::vector<mpz_class> counts;

    friend bool operator==(const CensusVector&, const CensusVector&) = default;
};

/// Cutset statistics derived from a census. B[i-1] counts the i-edge
/// removals that leave no terminal path of length at most d, i.e.
/// B_i = C(m,i) - N_{m-i}. lambda_st is the least positive i with B_i > 0,
/// or 0 when the graph itself has no terminal path of length at most d.
struct CutsetStats {
    int d = 0;
    int m = 0;
    std::vector<mpz_class> B;
    int lambda_st = 0;
    bool min_cutsets_all_trivial = false;
};

enum class CensusBackend { subset_enum, path_ie, auto_select };

struct CensusOptions {
    int workers = 0;                            // 0 = pick from hardware
    int subset_cap_m = 28;                      // max m for full subset enumeration
    std::size_t path_mask_cap = std::size_t{1} << 20;  // max stored path masks
    std::uint64_t ie_node_guard = std::uint64_t{1} << 26;  // inclusion-exclusion recursion guard
};

/// True iff the spanning subgraph selected by `sub` joins the terminals by a
/// path of length at most d (truncated breadth-first search).
bool is_d_pathset(const TwoTerminalGraph& g, EdgeSubset sub, int d);

/// Full census. subset_enum walks all 2^m edge subsets; path_ie enumerates
/// the terminal paths of length at most d and counts their union by
/// inclusion-exclusion. Both are exact and must agree.
CensusVector census(const TwoTerminalGraph& g, int d,
                    CensusBackend backend = CensusBackend::auto_select,
                    const CensusOptions& opts = {});

/// R(rho) = sum_i counts[i-1] (1-rho)^i rho^(m-i), exactly.
mpq_class evaluate_reliability(const CensusVector& c, const mpq_class& rho);
mpq_class evaluate_unreliability(const CensusVector& c, const mpq_class& rho);

/// Edge masks of all simple terminal-to-terminal paths of length <= d.
/// Deterministic order. Throws BackendInfeasibleError beyond `cap` masks.
std::vector<std::uint64_t> terminal_path_masks(const TwoTerminalGraph& g, int d,
                                               std::size_t cap);

/// Indices of edges lying on no terminal path of length at most d. Deleting
/// such an edge leaves the census related by
/// N_i(G) = N_{i-1}(G-e) + N_i(G-e).
std::vector<int> irrelevant_edges(const TwoTerminalGraph& g, int d,
                                  const CensusOptions& opts = {});

CutsetStats cutset_stats(const TwoTerminalGraph& g, int d,
                         const CensusOptions& opts = {});

/// B vector and lambda_st from an existing census (no triviality scan).
CutsetStats cutset_stats_from_census(const CensusVector& c);

}  // namespace ttr
