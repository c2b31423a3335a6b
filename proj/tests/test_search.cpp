#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>

#include "ttr/canonical.hpp"
#include "ttr/census.hpp"
#include "ttr/enumerate.hpp"
#include "ttr/io.hpp"
#include "ttr/rational.hpp"
#include "ttr/search.hpp"

using namespace ttr;

TEST_CASE("filtration on a tiny class") {
    ClassCatalog catalog;
    auto near1 = lmrttg_filtration(catalog, 3, 2, 2, FiltrationDirection::near1);
    REQUIRE(near1.size() == 1);
    TwoTerminalGraph winner = graph_from_word(near1[0], 3);
    CHECK(winner.has_edge(0, 1));  // N_1 = 1 beats 0
}

TEST_CASE("umrttg on small classes at d = 1") {
    ClassCatalog catalog;
    for (int n = 2; n <= 4; ++n) {
        for (int m = 1; m <= n * (n - 1) / 2; ++m) {
            ClassReport report = umrttg_decide(catalog, n, m, 1);
            REQUIRE(report.umrttg.kind == UmrttgOutcome::Kind::exists);
            for (std::uint64_t code : report.umrttg.winners)
                CHECK(graph_from_word(code, n).has_edge(0, 1));
            // every winner survives both filtrations
            for (std::uint64_t code : report.umrttg.winners) {
                CHECK(std::count(report.lmrttg_near_1.begin(), report.lmrttg_near_1.end(),
                                 code) == 1);
                CHECK(std::count(report.lmrttg_near_0.begin(), report.lmrttg_near_0.end(),
                                 code) == 1);
            }
        }
    }
}

TEST_CASE("umrttg decision is independent of d once unconstrained") {
    ClassCatalog catalog;
    ClassReport a = umrttg_decide(catalog, 5, 6, 4);
    ClassReport b = umrttg_decide(catalog, 5, 6, 7);
    CHECK(a.umrttg.kind == b.umrttg.kind);
    CHECK(a.umrttg.winners == b.umrttg.winners);
    CHECK(a.lmrttg_near_1 == b.lmrttg_near_1);
    CHECK(a.lmrttg_near_0 == b.lmrttg_near_0);
}

TEST_CASE("reports are deterministic") {
    ClassCatalog catalog;
    ClassReport a = umrttg_decide(catalog, 5, 5, 3);
    ClassReport b = umrttg_decide(catalog, 5, 5, 3);
    CHECK(class_report_json(a) == class_report_json(b));
}

TEST_CASE("crossing witness report at boundary rho") {
    CrossingReport r = verify_crossing_witness(11, 20, 4, mpq_class(0));
    CHECK(r.boundary_rho);
    CHECK(r.reliability_g == 1);
    CHECK(r.reliability_h == 1);
    CHECK(!r.strict_inequality);
}

TEST_CASE("n4 closed form pointwise") {
    // K_7 with two hat edges removed is a universal-terminal member of
    // T(7,19); the closed form must match its census.
    std::vector<Edge> edges;
    for (int u = 0; u < 7; ++u)
        for (int v = u + 1; v < 7; ++v) edges.emplace_back(u, v);
    TwoTerminalGraph k7(7, edges);
    TwoTerminalGraph g = with_edges_replaced(k7, {Edge(2, 3), Edge(4, 5)}, {});
    REQUIRE(terminals_universal(g));
    const int n = 7, m = 19;
    CensusVector c = census(g, n - 1);
    mpz_class expected = binomial(m - 1, 3) + mpz_class(n - 2) * binomial(m - 3, 2) -
                         binomial(n - 2, 2) + mpz_class(2) * (m - 2 * n + 3) * (m - 6) +
                         2 * count_p3(hat_graph(g));
    CHECK(c.counts[3] == expected);
}

TEST_CASE("parameter windows are enforced") {
    ClassCatalog catalog;
    CHECK_THROWS_AS(verify_crossing_witness(10, 20, 4, mpq_class(1, 2)), ParameterError);
    CHECK_THROWS_AS(verify_crossing_witness(11, 20, 3, mpq_class(1, 2)), ParameterError);
    CHECK_THROWS_AS(audit_near0_structure(catalog, 6, 12, 3), ParameterError);
    CHECK_THROWS_AS(verify_N4_formula(catalog, 7, 15), ParameterError);
    CHECK_THROWS_AS(verify_N4_formula(catalog, 7, 20), ParameterError);
}

TEST_CASE("base cases behind the m = 9, 10 uniqueness step") {
    // The two rival shapes at m = 9 and 10 are the complete graph on five
    // vertices (minus one non-terminal edge for m = 9) padded with isolated
    // vertices. The family-H member must win strictly at interior rationals.
    std::vector<Edge> k5_edges;
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v) k5_edges.emplace_back(u, v);
    TwoTerminalGraph k5_padded(6, k5_edges);
    TwoTerminalGraph k5e_padded = with_edges_replaced(k5_padded, {Edge(3, 4)}, {});

    CensusVector h9 = census(construct_family_H(6, 9), 3);
    CensusVector h10 = census(construct_family_H(6, 10), 3);
    CensusVector rival9 = census(k5e_padded, 3);
    CensusVector rival10 = census(k5_padded, 3);
    for (const char* rs : {"1/4", "1/2", "3/4"}) {
        mpq_class rho = parse_rational(rs);
        CHECK(evaluate_unreliability(h9, rho) < evaluate_unreliability(rival9, rho));
        CHECK(evaluate_unreliability(h10, rho) < evaluate_unreliability(rival10, rho));
    }
}
