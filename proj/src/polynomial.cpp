#include "ttr/polynomial.hpp"

#include <algorithm>
#include <cstdlib>

#include "ttr/rational.hpp"

namespace ttr {

ReliabilityPolynomial ReliabilityPolynomial::from_census(const CensusVector& c) {
    ReliabilityPolynomial p;
    p.m = c.m;
    p.counts = c.counts;
    p.expanded.assign(static_cast<std::size_t>(c.m + 1), mpz_class(0));
    // R = sum_i N_i (1-x)^i x^(m-i); coefficient of x^(m-i+l) gains
    // N_i * (-1)^l * C(i,l).
    for (int i = 1; i <= c.m; ++i) {
        const mpz_class& ni = c.counts[static_cast<std::size_t>(i - 1)];
        if (ni == 0) continue;
        for (int l = 0; l <= i; ++l) {
            mpz_class term = ni * binomial(static_cast<unsigned long>(i),
                                           static_cast<unsigned long>(l));
            if (l % 2) term = -term;
            p.expanded[static_cast<std::size_t>(c.m - i + l)] += term;
        }
    }
    return p;
}

mpq_class ReliabilityPolynomial::evaluate(const mpq_class& rho) const {
    CensusVector c;
    c.m = m;
    c.d = 0;
    c.counts = counts;
    return evaluate_reliability(c, rho);
}

LexKeys lexicographic_keys(const CensusVector& c) {
    LexKeys k;
    k.near1 = c.counts;
    k.near0.assign(c.counts.rbegin(), c.counts.rend());
    return k;
}

int lex_compare_near1(const CensusVector& a, const CensusVector& b) {
    if (a.m != b.m) throw DimensionMismatchError("comparing censuses of different m");
    for (std::size_t i = 0; i < a.counts.size(); ++i) {
        int c = cmp(a.counts[i], b.counts[i]);
        if (c != 0) return c > 0 ? 1 : -1;
    }
    return 0;
}

int lex_compare_near0(const CensusVector& a, const CensusVector& b) {
    if (a.m != b.m) throw DimensionMismatchError("comparing censuses of different m");
    for (std::size_t i = a.counts.size(); i-- > 0;) {
        int c = cmp(a.counts[i], b.counts[i]);
        if (c != 0) return c > 0 ? 1 : -1;
    }
    return 0;
}

namespace detail {

namespace {

using Poly = std::vector<mpz_class>;  // coefficients, low degree first

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly derivative(const Poly& p) {
    Poly d;
    for (std::size_t k = 1; k < p.size(); ++k)
        d.push_back(p[k] * mpz_class(static_cast<unsigned long>(k)));
    trim(d);
    return d;
}

mpz_class content(const Poly& p) {
    mpz_class g = 0;
    for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;  // nonnegative by gmp convention
}

Poly primitive_part(Poly p) {
    trim(p);
    if (p.empty()) return p;
    mpz_class g = content(p);
    if (sign_of(p.back()) < 0) g = -g;
    for (auto& c : p) c /= g;
    return p;
}

// Pseudo-remainder of a by b (b nonzero, deg a >= deg b).
Poly pseudo_rem(Poly a, const Poly& b) {
    const mpz_class& lb = b.back();
    int da = static_cast<int>(a.size()) - 1;
    const int db = static_cast<int>(b.size()) - 1;
    while (da >= db) {
        mpz_class lead = a.back();
        for (auto& c : a) c *= lb;
        for (int k = 0; k <= db; ++k)
            a[static_cast<std::size_t>(da - db + k)] -= lead * b[static_cast<std::size_t>(k)];
        trim(a);
        if (a.empty()) break;
        da = static_cast<int>(a.size()) - 1;
    }
    return a;
}

Poly gcd_poly(Poly a, Poly b) {
    a = primitive_part(std::move(a));
    b = primitive_part(std::move(b));
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        Poly r = primitive_part(pseudo_rem(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Exact division; the divisor is known to divide p over the integers.
Poly exact_div(const Poly& p, const Poly& d) {
    if (d.empty()) throw InternalInvariantError("polynomial division by zero");
    Poly rem = p;
    trim(rem);
    Poly q(rem.size() >= d.size() ? rem.size() - d.size() + 1 : 0, mpz_class(0));
    while (rem.size() >= d.size() && !rem.empty()) {
        mpz_class c = rem.back() / d.back();
        if (c * d.back() != rem.back())
            throw InternalInvariantError("inexact polynomial division");
        std::size_t shift = rem.size() - d.size();
        q[shift] = c;
        for (std::size_t k = 0; k < d.size(); ++k) rem[shift + k] -= c * d[k];
        trim(rem);
    }
    if (!rem.empty()) throw InternalInvariantError("nonzero remainder in exact division");
    return q;
}

// q(x) = p(x + c)
Poly taylor_shift(Poly p, const mpz_class& c) {
    if (p.empty()) return p;
    const int n = static_cast<int>(p.size()) - 1;
    for (int i = 0; i < n; ++i)
        for (int j = n - 1; j >= i; --j)
            p[static_cast<std::size_t>(j)] += c * p[static_cast<std::size_t>(j + 1)];
    return p;
}

Poly reverse_poly(Poly p) {
    std::reverse(p.begin(), p.end());
    trim(p);
    return p;
}

int sign_variations(const Poly& p) {
    int var = 0, last = 0;
    for (const auto& c : p) {
        int s = sign_of(c);
        if (s == 0) continue;
        if (last != 0 && s != last) ++var;
        last = s;
    }
    return var;
}

struct Cell {
    mpz_class c;
    int k = 0;  // interval (c/2^k, (c+1)/2^k)

    mpq_class lo() const {
        mpq_class r(c, mpz_class(1) << k);
        r.canonicalize();
        return r;
    }
    mpq_class hi() const {
        mpq_class r(c + 1, mpz_class(1) << k);
        r.canonicalize();
        return r;
    }
    mpq_class mid() const {
        mpq_class r(2 * c + 1, mpz_class(1) << (k + 1));
        r.canonicalize();
        return r;
    }
};

// Descartes bound on the number of roots of `s` strictly inside the cell.
// Endpoint roots contribute a zero constant term (stripped) or a degree
// drop, neither of which adds sign variations.
int cell_variations(const Poly& s, const Cell& cell) {
    const int n = static_cast<int>(s.size()) - 1;
    Poly b(s.size());
    mpz_class pw(1);
    for (int j = n; j >= 0; --j) {
        b[static_cast<std::size_t>(j)] = s[static_cast<std::size_t>(j)] * pw;
        pw <<= cell.k;  // 2^(k*(n-j))
    }
    b = taylor_shift(std::move(b), cell.c);
    std::size_t low = 0;
    while (low < b.size() && b[low] == 0) ++low;
    b.erase(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(low));
    trim(b);
    if (b.empty()) throw InternalInvariantError("zero polynomial in cell test");
    return sign_variations(taylor_shift(reverse_poly(std::move(b)), 1));
}

constexpr int kMaxDepth = 512;

}  // namespace

int sign_at(const std::vector<mpz_class>& coeffs, const mpq_class& x) {
    Poly p = coeffs;
    trim(p);
    if (p.empty()) return 0;
    const mpz_class num = x.get_num(), den = x.get_den();
    mpz_class acc = p.back(), dp = 1;
    for (std::size_t k = p.size() - 1; k-- > 0;) {
        dp *= den;
        acc = acc * num + p[k] * dp;
    }
    return sign_of(acc);
}

std::vector<mpz_class> squarefree_part(const std::vector<mpz_class>& coeffs) {
    Poly p = primitive_part(coeffs);
    if (static_cast<int>(p.size()) - 1 < 2) return p;
    Poly g = gcd_poly(p, derivative(p));
    if (static_cast<int>(g.size()) - 1 < 1) return p;
    return primitive_part(exact_div(p, g));
}

std::vector<RootLocator> isolate_roots_01(const std::vector<mpz_class>& coeffs) {
    Poly e = coeffs;
    trim(e);
    if (e.empty()) throw PreconditionError("cannot isolate roots of the zero polynomial");
    if (sign_at(e, mpq_class(0)) == 0 || sign_at(e, mpq_class(1)) == 0)
        throw PreconditionError("isolation requires nonzero values at 0 and 1");

    Poly s = squarefree_part(e);
    std::vector<mpq_class> exact;
    std::vector<Cell> leaves;

    std::vector<Cell> work{Cell{mpz_class(0), 0}};
    while (!work.empty()) {
        Cell cell = work.back();
        work.pop_back();
        int var = cell_variations(s, cell);
        if (var == 0) continue;
        if (var == 1) {
            leaves.push_back(cell);
            continue;
        }
        if (cell.k + 1 > kMaxDepth)
            throw InternalInvariantError("root isolation exceeded depth bound");
        if (sign_at(s, cell.mid()) == 0) exact.push_back(cell.mid());
        work.push_back(Cell{cell.c * 2, cell.k + 1});
        work.push_back(Cell{cell.c * 2 + 1, cell.k + 1});
    }

    // Refine every leaf until its endpoints avoid 0, 1 and all exact roots,
    // so that sign samples can be placed strictly between distinct roots.
    auto is_exact_root = [&](const mpq_class& x) {
        return std::find(exact.begin(), exact.end(), x) != exact.end();
    };
    std::vector<RootLocator> out;
    for (Cell cell : leaves) {
        bool became_exact = false;
        while (cell.c == 0 || cell.hi() == 1 || is_exact_root(cell.lo()) ||
               is_exact_root(cell.hi())) {
            if (cell.k + 1 > kMaxDepth)
                throw InternalInvariantError("leaf refinement exceeded depth bound");
            if (sign_at(s, cell.mid()) == 0) {
                exact.push_back(cell.mid());
                became_exact = true;
                break;
            }
            Cell left{cell.c * 2, cell.k + 1};
            Cell right{cell.c * 2 + 1, cell.k + 1};
            // Odd variation count <=> odd number of interior roots, and the
            // cell holds exactly one root, so parity locates it exactly.
            cell = (cell_variations(s, left) % 2 == 1) ? left : right;
        }
        if (!became_exact) {
            RootLocator loc;
            loc.exact = false;
            loc.lo = cell.lo();
            loc.hi = cell.hi();
            out.push_back(loc);
        }
    }
    for (const mpq_class& x : exact) {
        RootLocator loc;
        loc.exact = true;
        loc.lo = x;
        loc.hi = x;
        out.push_back(loc);
    }
    std::sort(out.begin(), out.end(),
              [](const RootLocator& a, const RootLocator& b) { return a.lo < b.lo; });
    for (std::size_t i = 1; i < out.size(); ++i) {
        if (out[i - 1].hi > out[i].lo)
            throw InternalInvariantError("overlapping root locators");
    }
    return out;
}

}  // namespace detail

namespace {

// Sample points between consecutive root locators (plus one before the first
// and one after the last); none of them is a root.
std::vector<mpq_class> between_root_samples(const std::vector<detail::RootLocator>& locs) {
    std::vector<mpq_class> samples;
    mpq_class prev_hi(0);
    for (const auto& loc : locs) {
        if (prev_hi < loc.lo) {
            mpq_class mid = (prev_hi + loc.lo) / 2;
            mid.canonicalize();
            samples.push_back(mid);
        } else {
            samples.push_back(prev_hi);  // shared non-root cell boundary
        }
        prev_hi = loc.hi;
    }
    mpq_class tail = (prev_hi + 1) / 2;
    tail.canonicalize();
    samples.push_back(tail);
    return samples;
}

}  // namespace

ComparisonVerdict compare_on_unit_interval(const CensusVector& a, const CensusVector& b) {
    if (a.m != b.m) throw DimensionMismatchError("censuses have different m");
    if (a.d != b.d) throw DimensionMismatchError("censuses have different d");
    const int m = a.m;

    ComparisonVerdict v;
    std::vector<mpz_class> diff(static_cast<std::size_t>(m));
    bool any_pos = false, any_neg = false;
    for (int i = 0; i < m; ++i) {
        diff[static_cast<std::size_t>(i)] =
            a.counts[static_cast<std::size_t>(i)] - b.counts[static_cast<std::size_t>(i)];
        int s = sign_of(diff[static_cast<std::size_t>(i)]);
        any_pos |= s > 0;
        any_neg |= s < 0;
    }

    // Local winners from the lexicographic keys.
    for (int i = 0; i < m; ++i) {
        int s = sign_of(diff[static_cast<std::size_t>(i)]);
        if (s != 0) {
            v.near_one_winner = s > 0 ? Side::first : Side::second;
            break;
        }
    }
    for (int i = m; i-- > 0;) {
        int s = sign_of(diff[static_cast<std::size_t>(i)]);
        if (s != 0) {
            v.near_zero_winner = s > 0 ? Side::first : Side::second;
            break;
        }
    }

    if (!any_pos && !any_neg) {
        v.kind = VerdictKind::equal;
        return v;
    }
    if (!any_neg) {
        v.kind = VerdictKind::dominates;
        return v;
    }
    if (!any_pos) {
        v.kind = VerdictKind::dominated;
        return v;
    }

    // Mixed signs: expand D = R_a - R_b over the integers. Factoring out
    // rho^(m-imax) (1-rho)^imin leaves a polynomial E with E(0), E(1) != 0
    // and the same sign as D on (0,1).
    int imin = 0, imax = 0;
    for (int i = 1; i <= m; ++i)
        if (diff[static_cast<std::size_t>(i - 1)] != 0) {
            imin = i;
            break;
        }
    for (int i = m; i >= 1; --i)
        if (diff[static_cast<std::size_t>(i - 1)] != 0) {
            imax = i;
            break;
        }
    std::vector<mpz_class> e(static_cast<std::size_t>(imax - imin + 1), mpz_class(0));
    for (int i = imin; i <= imax; ++i) {
        const mpz_class& di = diff[static_cast<std::size_t>(i - 1)];
        if (di == 0) continue;
        for (int l = 0; l <= i - imin; ++l) {
            mpz_class term = di * binomial(static_cast<unsigned long>(i - imin),
                                           static_cast<unsigned long>(l));
            if (l % 2) term = -term;
            e[static_cast<std::size_t>(imax - i + l)] += term;
        }
    }

    auto locs = detail::isolate_roots_01(e);
    auto samples = between_root_samples(locs);

    std::vector<int> signs;
    signs.reserve(samples.size());
    for (const auto& x : samples) {
        int s = detail::sign_at(e, x);
        if (s == 0) throw InternalInvariantError("sample hit a root");
        signs.push_back(s);
    }

    bool pos = std::any_of(signs.begin(), signs.end(), [](int s) { return s > 0; });
    bool neg = std::any_of(signs.begin(), signs.end(), [](int s) { return s < 0; });
    if (pos && !neg) {
        v.kind = VerdictKind::dominates;
        return v;
    }
    if (neg && !pos) {
        v.kind = VerdictKind::dominated;
        return v;
    }

    v.kind = VerdictKind::crossing;
    for (std::size_t i = 0; i + 1 < samples.size(); ++i) {
        if (signs[i] != signs[i + 1]) {
            v.iso_lo = samples[i];
            v.iso_hi = samples[i + 1];
            v.rho_pos = signs[i] > 0 ? samples[i] : samples[i + 1];
            v.rho_neg = signs[i] < 0 ? samples[i] : samples[i + 1];
            mpq_class mid = (samples[i] + samples[i + 1]) / 2;
            mid.canonicalize();
            int smid = detail::sign_at(e, mid);
            if (smid == 0) {
                mid = (samples[i] + mid) / 2;
                mid.canonicalize();
                smid = detail::sign_at(e, mid);
            }
            v.rho_star = mid;
            v.sign_at_rho_star = smid;
            break;
        }
    }
    return v;
}

}  // namespace ttr
