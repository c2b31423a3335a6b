#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ttr/canonical.hpp"
#include "ttr/census.hpp"
#include "ttr/enumerate.hpp"
#include "ttr/polynomial.hpp"
#include "ttr/rational.hpp"
#include "ttr/search.hpp"

using namespace ttr;

namespace {

CensusVector make_counts(int d, std::vector<long> v) {
    CensusVector c;
    c.d = d;
    c.m = static_cast<int>(v.size());
    c.counts.assign(v.begin(), v.end());
    return c;
}

int sign_of_difference_at(const CensusVector& a, const CensusVector& b, const mpq_class& x) {
    mpq_class d = evaluate_reliability(a, x) - evaluate_reliability(b, x);
    return sign_of(d);
}

}  // namespace

TEST_CASE("expansion invariants") {
    TwoTerminalGraph a40 = construct_family_A(4, 0);
    CensusVector c = census(a40, 2);
    ReliabilityPolynomial p = ReliabilityPolynomial::from_census(c);
    CHECK(p.expanded[0] == c.counts.back());  // R(0) = N_m
    mpq_class half(1, 2);
    CHECK(p.evaluate(half) == evaluate_reliability(c, half));
    // R(1) = 0: the expanded coefficients sum to zero
    mpz_class sum = 0;
    for (const auto& z : p.expanded) sum += z;
    CHECK(sum == 0);
}

TEST_CASE("lexicographic keys") {
    CensusVector a = make_counts(3, {1, 6, 10, 5, 1});
    CensusVector b = make_counts(3, {0, 6, 10, 5, 1});
    CHECK(lex_compare_near1(a, b) == 1);

    CensusVector c = make_counts(2, {0, 2, 3});
    CHECK(lex_compare_near1(c, c) == 0);
    CHECK(lex_compare_near0(c, c) == 0);

    CensusVector d1 = make_counts(2, {1, 4, 6});
    CensusVector d2 = make_counts(2, {1, 5, 5});
    CHECK(lex_compare_near1(d1, d2) == -1);  // tie at N_1, N_2 decides
    CHECK(lex_compare_near0(d1, d2) == 1);   // N_3 decides

    LexKeys keys = lexicographic_keys(d1);
    CHECK(keys.near1.front() == 1);
    CHECK(keys.near0.front() == 6);
}

TEST_CASE("verdicts on simple cases") {
    CensusVector a = make_counts(2, {1, 1});
    CHECK(compare_on_unit_interval(a, a).kind == VerdictKind::equal);

    CensusVector b = make_counts(2, {0, 1});
    ComparisonVerdict v = compare_on_unit_interval(a, b);
    CHECK(v.kind == VerdictKind::dominates);
    CHECK(v.near_one_winner == Side::first);
    CHECK(v.near_zero_winner == Side::first);
    CHECK(compare_on_unit_interval(b, a).kind == VerdictKind::dominated);
}

TEST_CASE("crossing produces an exact certificate") {
    // Difference (1-rho) rho^2 - (1-rho)^3 = (1-rho)(2rho-1): one strict
    // sign change, exactly at the dyadic point 1/2.
    CensusVector a = make_counts(1, {1, 3, 3});
    CensusVector b = make_counts(1, {0, 3, 4});
    ComparisonVerdict v = compare_on_unit_interval(a, b);
    REQUIRE(v.kind == VerdictKind::crossing);
    CHECK(sign_of_difference_at(a, b, v.rho_pos) > 0);
    CHECK(sign_of_difference_at(a, b, v.rho_neg) < 0);
    CHECK(sign_of_difference_at(a, b, v.iso_lo) *
              sign_of_difference_at(a, b, v.iso_hi) == -1);
    CHECK(v.rho_star > v.iso_lo);
    CHECK(v.rho_star < v.iso_hi);
    CHECK(v.sign_at_rho_star != 0);
    CHECK(sign_of_difference_at(a, b, v.rho_star) == v.sign_at_rho_star);
    CHECK(v.near_one_winner == Side::first);
    CHECK(v.near_zero_winner == Side::second);

    ComparisonVerdict mirror = compare_on_unit_interval(b, a);
    CHECK(mirror.kind == VerdictKind::crossing);
    CHECK(mirror.near_one_winner == Side::second);
    CHECK(mirror.near_zero_winner == Side::first);
}

TEST_CASE("verdicts never contradict dense sampling") {
    // Every pair in T(5,5) and T(5,6): sample the difference at k/64 and
    // check consistency with the verdict. Sampling is the falsifier here,
    // not the decision procedure.
    ClassCatalog catalog(8);
    for (int m : {5, 6}) {
        auto members = class_censuses(catalog, 5, m, 3, {});
        for (std::size_t i = 0; i < members.size(); ++i) {
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                const CensusVector& a = members[i].census;
                const CensusVector& b = members[j].census;
                ComparisonVerdict v = compare_on_unit_interval(a, b);
                bool saw_pos = false, saw_neg = false;
                for (int k = 0; k <= 64; ++k) {
                    mpq_class x(k, 64);
                    x.canonicalize();
                    int s = sign_of_difference_at(a, b, x);
                    saw_pos |= s > 0;
                    saw_neg |= s < 0;
                }
                switch (v.kind) {
                    case VerdictKind::equal:
                        CHECK(!saw_pos);
                        CHECK(!saw_neg);
                        break;
                    case VerdictKind::dominates:
                        CHECK(!saw_neg);
                        break;
                    case VerdictKind::dominated:
                        CHECK(!saw_pos);
                        break;
                    case VerdictKind::crossing:
                        // dense sampling may miss a sign region but must
                        // never produce one the verdict forbids
                        break;
                }
                ComparisonVerdict mirror = compare_on_unit_interval(b, a);
                if (v.kind == VerdictKind::dominates)
                    CHECK(mirror.kind == VerdictKind::dominated);
                if (v.kind == VerdictKind::crossing)
                    CHECK(mirror.kind == VerdictKind::crossing);
            }
        }
    }
}

TEST_CASE("root isolation locates exact rational roots") {
    // (2x-1)(3x-1)(5x-4) = 30x^3 - 61x^2 + 33x - 4, roots 1/2, 1/3, 4/5
    std::vector<mpz_class> p{-4, 33, -61, 30};
    auto locs = detail::isolate_roots_01(p);
    REQUIRE(locs.size() == 3);
    std::vector<mpq_class> expected{mpq_class(1, 3), mpq_class(1, 2), mpq_class(4, 5)};
    for (std::size_t i = 0; i < 3; ++i) {
        if (locs[i].exact) {
            CHECK(locs[i].lo == expected[i]);
        } else {
            CHECK(locs[i].lo < expected[i]);
            CHECK(expected[i] < locs[i].hi);
        }
    }
    // squares do not flip signs and must not confuse the machinery
    // (2x-1)^2 (x^2+1)
    std::vector<mpz_class> sq{1, -4, 5, -4, 4};
    auto locs2 = detail::isolate_roots_01(sq);
    REQUIRE(locs2.size() == 1);
}

TEST_CASE("mismatched dimensions are rejected") {
    CensusVector a = make_counts(2, {1, 1});
    CensusVector b = make_counts(2, {0, 1, 1});
    CHECK_THROWS_AS(compare_on_unit_interval(a, b), DimensionMismatchError);
    CensusVector c = make_counts(3, {1, 1});
    CHECK_THROWS_AS(compare_on_unit_interval(a, c), DimensionMismatchError);
}
