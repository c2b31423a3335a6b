#pragma once

#include <vector>

#include "ttr/census.hpp"
#include "ttr/graph.hpp"

namespace ttr {

/// Machine-checked claim that `after` improves on `before` at distance d:
/// componentwise census domination with at least one strict coordinate.
/// Certificates are always recomputed from full censuses, never trusted
/// from the construction that produced the move.
struct StrongerCertificate {
    CensusVector before;
    CensusVector after;
    int d = 0;
    bool verified = false;
};

StrongerCertificate make_certificate(const TwoTerminalGraph& before,
                                     const TwoTerminalGraph& after, int d,
                                     const CensusOptions& opts = {});

struct TransformResult {
    bool applied = false;   // false = input already satisfied the target shape
    TwoTerminalGraph graph;
    StrongerCertificate certificate;
};

/// Replaces edge `e` by the terminal edge st. Requires st absent.
/// The result is stronger than the input at every distance bound.
TransformResult st_swap(const TwoTerminalGraph& g, int edge_index, int d,
                        const CensusOptions& opts = {});

/// Rewires the graph until the terminals are true twins, one certified
/// improving move at a time (d = 3). Requires n >= 5 and m >= 5.
/// Signals no-op when the terminals are already true twins.
TransformResult twin_terminals(const TwoTerminalGraph& g,
                               const CensusOptions& opts = {});

/// Drives the graph into the target shape T*: true-twin terminals and no
/// edge irrelevant at distance 3. Composite end-to-end certificate at d = 3.
TransformResult normalize_to_Tstar(const TwoTerminalGraph& g,
                                   const CensusOptions& opts = {});

/// Membership test for the target shape of normalize_to_Tstar.
bool in_Tstar(const TwoTerminalGraph& g, const CensusOptions& opts = {});

}  // namespace ttr
