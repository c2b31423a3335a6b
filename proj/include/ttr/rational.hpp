#pragma once

#include <gmpxx.h>

#include <string>

#include "ttr/errors.hpp"

namespace ttr {

/// Binomial coefficient C(n, k) as an exact integer; 0 when k > n.
inline mpz_class binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

/// Parses "p/q" or "p". Decimal notation is rejected: every probability in
/// this tool is an exact rational, so "0.5" must be written "1/2".
mpq_class parse_rational(const std::string& text);

/// Lowest-terms rendering: "p/q", or "p" when the denominator is 1.
std::string rational_string(const mpq_class& q);

inline int sign_of(const mpz_class& z) { return mpz_sgn(z.get_mpz_t()); }
inline int sign_of(const mpq_class& q) { return mpq_sgn(q.get_mpq_t()); }

}  // namespace ttr
