#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <random>

#include "ttr/canonical.hpp"
#include "ttr/census.hpp"
#include "ttr/graph.hpp"
#include "ttr/rational.hpp"

using namespace ttr;

namespace {

// Test-only oracle, independent of the production backends: enumerate every
// subset and decide the pathset property by enumerating all simple terminal
// paths inside the subset with a plain recursive walk.
bool oracle_has_short_path(const TwoTerminalGraph& g, std::uint64_t mask, int v, int used,
                           int d, std::uint32_t visited) {
    if (v == g.t()) return true;
    if (used == d) return false;
    for (int w = 0; w < g.n(); ++w) {
        if ((visited >> w) & 1) continue;
        int e = g.edge_index(v, w);
        if (e < 0 || !((mask >> e) & 1)) continue;
        if (oracle_has_short_path(g, mask, w, used + 1, d, visited | (std::uint32_t{1} << w)))
            return true;
    }
    return false;
}

CensusVector oracle_census(const TwoTerminalGraph& g, int d) {
    CensusVector c;
    c.d = d;
    c.m = g.m();
    c.counts.assign(static_cast<std::size_t>(g.m()), mpz_class(0));
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.m()); ++mask) {
        if (oracle_has_short_path(g, mask, g.s(), 0, d, std::uint32_t{1} << g.s())) {
            int i = std::popcount(mask);
            if (i >= 1) c.counts[static_cast<std::size_t>(i - 1)] += 1;
        }
    }
    return c;
}

TwoTerminalGraph complete_ttg(int n) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return TwoTerminalGraph(n, std::move(edges));
}

std::vector<mpz_class> z(std::vector<long> v) {
    return std::vector<mpz_class>(v.begin(), v.end());
}

}  // namespace

TEST_CASE("pathset membership") {
    TwoTerminalGraph a40 = construct_family_A(4, 0);
    int st = a40.edge_index(0, 1);
    int sv3 = a40.edge_index(0, 2);
    int v3t = a40.edge_index(1, 2);
    int v4t = a40.edge_index(1, 3);

    CHECK(is_d_pathset(a40, {std::uint64_t{1} << st}, 1));
    std::uint64_t two_path = (std::uint64_t{1} << sv3) | (std::uint64_t{1} << v3t);
    CHECK(!is_d_pathset(a40, {two_path}, 1));
    CHECK(is_d_pathset(a40, {two_path}, 2));
    std::uint64_t broken = (std::uint64_t{1} << sv3) | (std::uint64_t{1} << v4t);
    CHECK(!is_d_pathset(a40, {broken}, 99));
    CHECK_THROWS_AS(is_d_pathset(a40, {~std::uint64_t{0}}, 2), ParameterError);
}

TEST_CASE("census on the frozen examples") {
    TwoTerminalGraph single(2, {Edge(0, 1)});
    CHECK(census(single, 1).counts == z({1}));

    TwoTerminalGraph a40 = construct_family_A(4, 0);
    CHECK(census(a40, 3).counts == z({1, 6, 10, 5, 1}));
    CHECK(census(a40, 3) == oracle_census(a40, 3));

    TwoTerminalGraph path2(3, {Edge(0, 2), Edge(1, 2)});
    CHECK(census(path2, 1).counts == z({0, 0}));
}

TEST_CASE("reliability evaluation") {
    TwoTerminalGraph a40 = construct_family_A(4, 0);
    CensusVector c2 = census(a40, 2);
    mpq_class half(1, 2);
    CHECK(rational_string(evaluate_reliability(c2, half)) == "23/32");
    CHECK(rational_string(evaluate_unreliability(c2, half)) == "9/32");
    CHECK(evaluate_reliability(c2, mpq_class(1)) == 0);
    CHECK(evaluate_reliability(c2, mpq_class(0)) == 1);  // N_m = 1 here
    CHECK_THROWS_AS(evaluate_reliability(c2, mpq_class(2)), ParameterError);
}

TEST_CASE("irrelevant edges") {
    // A(4,0) plus the chord v3v4: the chord carries no terminal path at d=2
    // but rides the 3-path at d=3.
    TwoTerminalGraph g = with_edges_replaced(construct_family_A(4, 0), {}, {Edge(2, 3)});
    auto irr2 = irrelevant_edges(g, 2);
    REQUIRE(irr2.size() == 1);
    CHECK(g.edge(irr2[0]) == Edge(2, 3));
    CHECK(irrelevant_edges(g, 3).empty());

    // only the terminal edge survives at d=1 in a complete graph
    TwoTerminalGraph k5 = complete_ttg(5);
    auto irr1 = irrelevant_edges(k5, 1);
    CHECK(irr1.size() == static_cast<std::size_t>(k5.m() - 1));
    for (int e : irr1) CHECK(k5.edge(e) != Edge(0, 1));

    // an edge on short walks but no short simple path is still irrelevant:
    // s-a, a-u, u-v, v-a, a-t puts uv on a length-5 walk only.
    TwoTerminalGraph walk(5, {Edge(0, 2), Edge(1, 2), Edge(2, 3), Edge(2, 4), Edge(3, 4)});
    auto irr5 = irrelevant_edges(walk, 4);
    bool uv_irrelevant = false;
    for (int e : irr5)
        if (walk.edge(e) == Edge(3, 4)) uv_irrelevant = true;
    CHECK(uv_irrelevant);
}

TEST_CASE("deletion identity for irrelevant edges") {
    TwoTerminalGraph g = with_edges_replaced(construct_family_A(4, 0), {}, {Edge(2, 3)});
    const int d = 2;
    CensusVector full = census(g, d);
    for (int e : irrelevant_edges(g, d)) {
        TwoTerminalGraph del = with_edges_replaced(g, {g.edge(e)}, {});
        CensusVector cd = census(del, d);
        for (int i = 1; i <= g.m(); ++i) {
            mpz_class lower = i >= 2 ? cd.counts[static_cast<std::size_t>(i - 2)] : mpz_class(0);
            mpz_class same =
                i <= g.m() - 1 ? cd.counts[static_cast<std::size_t>(i - 1)] : mpz_class(0);
            CHECK(full.counts[static_cast<std::size_t>(i - 1)] == lower + same);
        }
    }
}

TEST_CASE("backend equivalence on random graphs") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 120; ++trial) {
        int n = 2 + static_cast<int>(rng() % 5);  // up to 6 vertices
        int slots = n * (n - 1) / 2;
        int m = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(slots));
        std::uint64_t word = 0;
        while (std::popcount(word) < m)
            word |= std::uint64_t{1} << (rng() % static_cast<std::uint64_t>(slots));
        TwoTerminalGraph g = graph_from_word(word, n);
        int d = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n - 1));
        CensusVector a = census(g, d, CensusBackend::subset_enum);
        CensusVector b = census(g, d, CensusBackend::path_ie);
        CHECK(a == b);
        CHECK(a == oracle_census(g, d));
    }
}

TEST_CASE("census monotone in d with stable prefix") {
    TwoTerminalGraph g = construct_family_A(6, 2);
    CensusVector full = census(g, g.n() - 1);
    for (int d = 1; d < g.n() - 1; ++d) {
        CensusVector c = census(g, d);
        for (int i = 1; i <= g.m(); ++i) {
            CHECK(c.counts[static_cast<std::size_t>(i - 1)] <=
                  full.counts[static_cast<std::size_t>(i - 1)]);
            if (i <= d)
                CHECK(c.counts[static_cast<std::size_t>(i - 1)] ==
                      full.counts[static_cast<std::size_t>(i - 1)]);
        }
    }
    // supersets of pathsets are pathsets: once positive, stays positive
    CensusVector c3 = census(g, 3);
    bool seen_positive = false;
    for (const auto& count : c3.counts) {
        if (count > 0) seen_positive = true;
        if (seen_positive) CHECK(count > 0);
    }
}

TEST_CASE("every terminal path in family H has length at most 3") {
    for (int n = 5; n <= 8; ++n)
        for (int m = 5; m <= 2 * n - 3; ++m) {
            TwoTerminalGraph h = construct_family_H(n, m);
            for (std::uint64_t mask : terminal_path_masks(h, n - 1, 1 << 20))
                CHECK(std::popcount(mask) <= 3);
        }
}

TEST_CASE("two-path product law for family A") {
    // U of A(k,0) at d >= 2 is rho (1-(1-rho)^2)^(k-2).
    for (int k = 3; k <= 7; ++k) {
        TwoTerminalGraph a = construct_family_A(k, 0);
        CensusVector c = census(a, 2);
        for (const char* rs : {"1/4", "1/2", "3/4"}) {
            mpq_class rho = parse_rational(rs);
            mpq_class expect = rho;
            mpq_class factor = 1 - (1 - rho) * (1 - rho);
            for (int i = 0; i < k - 2; ++i) expect *= factor;
            CHECK(evaluate_unreliability(c, rho) == expect);
        }
    }
}

TEST_CASE("recurrence for family H unreliability") {
    const int n = 6;
    for (const char* rs : {"1/4", "1/2", "3/4"}) {
        mpq_class rho = parse_rational(rs);
        for (int m = 5; m <= 2 * n - 5; ++m) {
            mpq_class um =
                evaluate_unreliability(census(construct_family_H(n, m), 3), rho);
            mpq_class um2 =
                evaluate_unreliability(census(construct_family_H(n, m + 2), 3), rho);
            CHECK(um2 == (1 - (1 - rho) * (1 - rho)) * um);
        }
    }
}

TEST_CASE("cutset stats") {
    // universal-terminal member of T(6,13): K6 minus two hat edges
    TwoTerminalGraph k6 = complete_ttg(6);
    TwoTerminalGraph g = with_edges_replaced(k6, {Edge(2, 3), Edge(4, 5)}, {});
    REQUIRE(g.m() == 13);
    REQUIRE(terminals_universal(g));
    CutsetStats st = cutset_stats(g, 3);
    CHECK(st.lambda_st == 5);  // n - 1
    CHECK(st.B[static_cast<std::size_t>(5 - 1)] == 2);  // the two trivial star cutsets
    CHECK(st.min_cutsets_all_trivial);

    TwoTerminalGraph h65 = construct_family_H(6, 5);
    CutsetStats st2 = cutset_stats(h65, 3);
    CHECK(st2.lambda_st == 3);

    // no terminal path at all: lambda is reported as 0
    TwoTerminalGraph split(4, {Edge(0, 2), Edge(1, 3)});
    CHECK(cutset_stats(split, 3).lambda_st == 0);
}

TEST_CASE("census caps") {
    TwoTerminalGraph a40 = construct_family_A(4, 0);
    CensusOptions tight;
    tight.subset_cap_m = 3;
    CHECK_THROWS_AS(census(a40, 2, CensusBackend::subset_enum, tight), CapacityError);
    CensusOptions few_paths;
    few_paths.path_mask_cap = 1;
    CHECK_THROWS_AS(census(a40, 3, CensusBackend::path_ie, few_paths),
                    BackendInfeasibleError);
    CHECK_THROWS_AS(census(a40, 0), ParameterError);
}
