#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "ttr/census.hpp"

namespace ttr {

/// Census counts read as a polynomial; `expanded` caches the standard-basis
/// integer coefficients of R(rho) (index = power of rho).
struct ReliabilityPolynomial {
    int m = 0;
    std::vector<mpz_class> counts;
    std::vector<mpz_class> expanded;

    static ReliabilityPolynomial from_census(const CensusVector& c);
    mpq_class evaluate(const mpq_class& rho) const;
};

enum class VerdictKind { dominates, dominated, equal, crossing };
enum class Side { first, second, tie };

/// Outcome of comparing two reliability polynomials on [0,1].
/// `dominates` means R_first >= R_second everywhere (equality only at
/// isolated points); `crossing` carries an exact certificate: two rationals
/// with strictly opposite difference signs and an isolating interval of one
/// sign change, plus rho_star inside it where the sign is evaluated exactly.
struct ComparisonVerdict {
    VerdictKind kind = VerdictKind::equal;
    Side near_one_winner = Side::tie;
    Side near_zero_winner = Side::tie;

    mpq_class rho_star = 0;
    int sign_at_rho_star = 0;  // sign of R_first - R_second at rho_star
    mpq_class rho_pos = 0;     // difference > 0 here
    mpq_class rho_neg = 0;     // difference < 0 here
    mpq_class iso_lo = 0;
    mpq_class iso_hi = 0;
};

/// Near-1 key is the count vector read N_1..N_m, near-0 key reads N_m..N_1;
/// in both, lexicographically larger means locally more reliable.
struct LexKeys {
    std::vector<mpz_class> near1;
    std::vector<mpz_class> near0;
};

LexKeys lexicographic_keys(const CensusVector& c);

/// Three-way lexicographic comparisons: +1 when `a` wins, -1 when `b` wins.
int lex_compare_near1(const CensusVector& a, const CensusVector& b);
int lex_compare_near0(const CensusVector& a, const CensusVector& b);

/// Exact sign classification of R_a - R_b on [0,1]. Componentwise count
/// domination is decided without root work; otherwise the difference is
/// expanded over the integers and its roots in (0,1) are isolated by
/// Descartes bisection with exact rational endpoints.
ComparisonVerdict compare_on_unit_interval(const CensusVector& a, const CensusVector& b);

namespace detail {

/// Root locator inside (0,1): either an exact rational root (lo == hi) or an
/// open interval containing exactly one root, endpoints guaranteed non-roots.
struct RootLocator {
    bool exact = false;
    mpq_class lo;
    mpq_class hi;
};

/// Isolates the roots of an integer polynomial (coeffs low to high) in the
/// open interval (0,1). Requires nonzero values at 0 and 1.
std::vector<RootLocator> isolate_roots_01(const std::vector<mpz_class>& coeffs);

/// Sign of the polynomial at an exact rational point.
int sign_at(const std::vector<mpz_class>& coeffs, const mpq_class& x);

/// Squarefree part (poly / gcd(poly, poly')).
std::vector<mpz_class> squarefree_part(const std::vector<mpz_class>& coeffs);

}  // namespace detail

}  // namespace ttr
