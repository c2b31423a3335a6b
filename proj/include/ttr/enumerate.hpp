#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <vector>

#include "ttr/canonical.hpp"
#include "ttr/graph.hpp"

namespace ttr {

/// Isomorph-free generation of the classes T_{n,m} (two-terminal graphs up
/// to terminal-preserving isomorphism, isolated vertices included).
/// Levels are built by augmenting the canonical representatives of level
/// m-1 with every absent edge and deduplicating by canonical code, so the
/// labeled space is never materialized. Levels are cached per n.
class ClassCatalog {
public:
    explicit ClassCatalog(int n_cap = 8) : n_cap_(n_cap) {}

    int n_cap() const { return n_cap_; }

    /// Sorted canonical codes of T_{n,m}.
    const std::vector<std::uint64_t>& codes(int n, int m);

    /// One representative per class, in sorted canonical-code order. Each
    /// returned graph is its own canonical form.
    std::vector<TwoTerminalGraph> enumerate_class(int n, int m);

    mpz_class class_size(int n, int m);

private:
    void require(int n, int m);

    int n_cap_;
    std::map<int, std::vector<std::vector<std::uint64_t>>> levels_;  // n -> m -> codes
};

std::vector<TwoTerminalGraph> enumerate_class(int n, int m, int n_cap = 8);
mpz_class class_size(int n, int m, int n_cap = 8);

}  // namespace ttr
