#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ttr/census.hpp"
#include "ttr/enumerate.hpp"
#include "ttr/polynomial.hpp"

namespace ttr {

struct SearchOptions {
    CensusOptions census;
    int workers = 0;
};

enum class FiltrationDirection { near1, near0 };

/// A class member together with its census, in canonical-code order.
struct ClassMemberCensus {
    std::uint64_t code = 0;
    TwoTerminalGraph graph;
    CensusVector census;
};

/// Censuses of every member of T_{n,m} at distance d (parallel over members,
/// deterministic canonical order).
std::vector<ClassMemberCensus> class_censuses(ClassCatalog& catalog, int n, int m,
                                              int d, const SearchOptions& opts = {});

/// Successive-argmax filtration: keeps the graphs maximizing N_1, then N_2,
/// ... (near1) or N_m, then N_{m-1}, ... (near0). The survivors are exactly
/// the locally most reliable graphs near rho = 1 (resp. rho = 0).
std::vector<std::uint64_t> lmrttg_filtration(ClassCatalog& catalog, int n, int m,
                                             int d, FiltrationDirection dir,
                                             const SearchOptions& opts = {});

/// Same filtration applied to precomputed censuses: returns surviving indices.
std::vector<std::size_t> filtration_survivors(const std::vector<ClassMemberCensus>& members,
                                              FiltrationDirection dir);

struct CrossingWitness {
    std::uint64_t candidate_code = 0;
    std::uint64_t member_code = 0;
    ComparisonVerdict verdict;  // kind == crossing
};

struct UmrttgOutcome {
    enum class Kind { exists, not_exists, undecided } kind = Kind::undecided;
    std::vector<std::uint64_t> winners;           // exists: all uniform optima
    std::optional<CrossingWitness> witness;       // not_exists: first crossing found
    std::string reason;                           // undecided only
};

struct ClassReport {
    int n = 0, m = 0, d = 0;
    mpz_class class_size;
    std::vector<std::uint64_t> lmrttg_near_1;
    std::vector<std::uint64_t> lmrttg_near_0;
    UmrttgOutcome umrttg;
    double seconds = 0.0;  // informational; not part of serialized reports
};

/// Full class decision: candidates are the graphs surviving both
/// filtrations; each candidate is compared against every class member, so a
/// crossing against a non-candidate is never missed. Winners exist iff some
/// candidate dominates (or ties) the whole class.
ClassReport umrttg_decide(ClassCatalog& catalog, int n, int m, int d,
                          const SearchOptions& opts = {});

/// Paired-construction crossing check at an exact rho. Builds the family-G
/// witness and the near-1 optimum (family H when m <= 2n-3, else family A),
/// verifies R_G(rho) > R_H(rho) exactly, and that the near-1 optimum beats
/// the witness lexicographically near 1. Only the rho inequality and the
/// lexicographic comparison are machine-checked here; uniqueness of the
/// near-1 optimum at this scale is not enumerable and is not claimed.
struct CrossingReport {
    int n = 0, m = 0, d = 0;
    mpq_class rho;
    std::string g_family;   // e.g. "G(11,20) = A(9,5) + 2 isolated"
    std::string h_family;   // e.g. "H(11,20)" or "A(11,5)"
    mpq_class reliability_g;
    mpq_class reliability_h;
    bool strict_inequality = false;      // R_G(rho) > R_H(rho)
    bool near1_h_beats_g = false;        // lexicographic near-1 comparison
    bool boundary_rho = false;           // rho in {0,1}: strictness impossible
    bool ok = false;                     // strict && near1 (when not boundary)
};

CrossingReport verify_crossing_witness(int n, int m, int d, const mpq_class& rho,
                                       const SearchOptions& opts = {});

/// Classwide audit of the near-0 structure at d >= 3, 3n-5 <= m <= C(n,2):
/// near-0 survivors have universal terminals, almost-regular hat graphs and
/// lambda_st = n-1; non-universal members have lambda_st <= n-2; on every
/// universal member B_{n-2+i} = 2 C(m-n+1, i-1) for 1 <= i <= lambda(hat)
/// with strict excess at i = lambda(hat)+1.
struct AuditReport {
    int n = 0, m = 0, d = 0;
    int members_checked = 0;
    int survivors = 0;
    bool ok = false;
    std::vector<std::string> violations;
};

AuditReport audit_near0_structure(ClassCatalog& catalog, int n, int m, int d,
                                  const SearchOptions& opts = {});

/// Checks the closed form for N_4 on every universal-terminal member of
/// T_{n,m} against the unconstrained census (d = n-1).
struct N4Report {
    int n = 0, m = 0;
    int members_checked = 0;
    bool ok = false;
    std::vector<std::string> mismatches;
};

N4Report verify_N4_formula(ClassCatalog& catalog, int n, int m,
                           const SearchOptions& opts = {});

}  // namespace ttr
