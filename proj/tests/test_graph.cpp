#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "ttr/graph.hpp"
#include "ttr/io.hpp"
#include "ttr/rational.hpp"

using namespace ttr;

namespace {

// Brute-force P_3 count: ordered triples (a,b,c) with ab, bc edges, a != c,
// counted once per unordered path.
mpz_class p3_by_triples(const PlainGraph& h) {
    long count = 0;
    for (int a = 0; a < h.n(); ++a)
        for (int b = 0; b < h.n(); ++b)
            for (int c = a + 1; c < h.n(); ++c) {
                if (a == b || b == c) continue;
                if (h.has_edge(a, b) && h.has_edge(b, c)) ++count;
            }
    return mpz_class(count);
}

PlainGraph complete_plain(int n) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return PlainGraph(n, std::move(edges));
}

TwoTerminalGraph complete_ttg(int n) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return TwoTerminalGraph(n, std::move(edges));
}

}  // namespace

TEST_CASE("family A construction") {
    TwoTerminalGraph a40 = construct_family_A(4, 0);
    CHECK(a40.m() == 5);
    CHECK(a40.has_edge(0, 1));
    CHECK(a40.has_edge(0, 2));
    CHECK(a40.has_edge(0, 3));
    CHECK(a40.has_edge(1, 2));
    CHECK(a40.has_edge(1, 3));

    CHECK(construct_family_A(3, 0).m() == 3);  // triangle

    TwoTerminalGraph a63 = construct_family_A(6, 3);
    CHECK(a63.m() == 12);
    CHECK(a63.has_edge(2, 3));
    CHECK(a63.has_edge(2, 4));
    CHECK(a63.has_edge(2, 5));

    for (int n = 3; n <= 9; ++n)
        for (int r = 0; r <= n - 3; ++r) {
            TwoTerminalGraph a = construct_family_A(n, r);
            CHECK(a.m() == 2 * n - 3 + r);
            for (int v = 2; v < n; ++v) {
                CHECK(a.has_edge(0, v));
                CHECK(a.has_edge(v, 1));
            }
            // hat graph: r edges, all at the image of the chord center
            PlainGraph hat = hat_graph(a);
            CHECK(hat.m() == r);
            CHECK(hat.degree(0) == r);
        }

    CHECK_THROWS_AS(construct_family_A(4, 2), ParameterError);
    CHECK_THROWS_AS(construct_family_A(2, 0), ParameterError);
}

TEST_CASE("family H construction") {
    TwoTerminalGraph h69 = construct_family_H(6, 9);
    CHECK(h69.n() == 6);
    CHECK(h69.m() == 9);
    CHECK(h69.edges() == construct_family_A(6, 0).edges());

    TwoTerminalGraph h68 = construct_family_H(6, 8);
    CHECK(h68.n() == 6);
    CHECK(h68.m() == 8);
    CHECK(h68.edges() == construct_family_A(5, 1).edges());
    CHECK(h68.degree(5) == 0);  // one isolated vertex

    TwoTerminalGraph h65 = construct_family_H(6, 5);
    CHECK(h65.edges() == construct_family_A(4, 0).edges());
    CHECK(h65.degree(4) == 0);
    CHECK(h65.degree(5) == 0);

    CHECK_THROWS_AS(construct_family_H(6, 4), ParameterError);
    CHECK_THROWS_AS(construct_family_H(6, 10), ParameterError);
    CHECK_THROWS_AS(construct_family_H(4, 5), ParameterError);
}

TEST_CASE("family G construction") {
    TwoTerminalGraph g1 = construct_family_G(11, 20);
    CHECK(g1.n() == 11);
    CHECK(g1.m() == 20);
    CHECK(g1.edges() == construct_family_A(9, 5).edges());

    TwoTerminalGraph g2 = construct_family_G(11, 24);
    CHECK(g2.n() == 11);
    CHECK(g2.m() == 24);
    CHECK(g2.edges() == construct_family_A(10, 7).edges());

    CHECK_THROWS_AS(construct_family_G(11, 19), ParameterError);
    CHECK_THROWS_AS(construct_family_G(11, 25), ParameterError);
    CHECK_THROWS_AS(construct_family_G(10, 20), ParameterError);
    // the override lets infeasible cores be probed explicitly
    CHECK_THROWS_AS(construct_family_G(11, 20, 6), ConstructionError);
}

TEST_CASE("structural predicates") {
    TwoTerminalGraph a40 = construct_family_A(4, 0);
    StructuralReport r = structural_predicates(a40);
    CHECK(r.terminals_true_twins);
    CHECK(r.terminals_universal);

    TwoTerminalGraph h65 = construct_family_H(6, 5);
    CHECK(!terminals_universal(h65));
    CHECK(terminals_true_twins(h65));

    TwoTerminalGraph k6 = complete_ttg(6);
    CHECK(terminals_universal(k6));
    PlainGraph hat = hat_graph(k6);
    CHECK(hat.n() == 4);
    CHECK(hat.m() == 6);

    // twins need the terminal edge itself
    TwoTerminalGraph path3(3, {Edge(0, 2), Edge(1, 2)});
    CHECK(!terminals_true_twins(path3));
}

TEST_CASE("p3 counting") {
    CHECK(count_p3(complete_plain(4)) == 12);
    CHECK(count_p3(PlainGraph(5, {})) == 0);
    CHECK(count_p3(PlainGraph(3, {Edge(0, 1), Edge(1, 2)})) == 1);

    // against the ordered-triple oracle on every graph shape we care about
    for (int n = 2; n <= 5; ++n) {
        int slots = n * (n - 1) / 2;
        for (int word = 0; word < (1 << slots); ++word) {
            std::vector<Edge> edges;
            int slot = 0;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v, ++slot)
                    if ((word >> slot) & 1) edges.emplace_back(u, v);
            PlainGraph h(n, std::move(edges));
            CHECK(count_p3(h) == p3_by_triples(h));
        }
    }
}

TEST_CASE("edge connectivity") {
    CHECK(edge_connectivity(complete_plain(4)) == 3);
    CHECK(edge_connectivity(PlainGraph(3, {Edge(0, 1), Edge(1, 2)})) == 1);
    PlainGraph two_triangles(6, {Edge(0, 1), Edge(0, 2), Edge(1, 2), Edge(3, 4), Edge(3, 5),
                                 Edge(4, 5)});
    CHECK(edge_connectivity(two_triangles) == 0);
    CHECK_THROWS_AS(edge_connectivity(PlainGraph(1, {})), PreconditionError);

    // lambda <= min degree on connected graphs
    PlainGraph near_complete(5, {Edge(0, 1), Edge(0, 2), Edge(0, 3), Edge(1, 2), Edge(1, 3),
                                 Edge(2, 3), Edge(3, 4)});
    CHECK(edge_connectivity(near_complete) <= 1);
}

TEST_CASE("graph invariants enforced") {
    CHECK_THROWS_AS(TwoTerminalGraph(1, {}), ParameterError);
    CHECK_THROWS_AS(TwoTerminalGraph(3, {Edge(0, 1), Edge(0, 1)}), ParameterError);
    CHECK_THROWS_AS(TwoTerminalGraph(3, {Edge(0, 3)}), ParameterError);
    CHECK_THROWS_AS(Edge(2, 2), ParameterError);
    CHECK_THROWS_AS(TwoTerminalGraph(4, {}, 2, 2), ParameterError);
}

TEST_CASE("ttg format round trip and rejection") {
    TwoTerminalGraph g = construct_family_A(5, 2);
    std::string text = emit_ttg(g);
    TwoTerminalGraph back = parse_graph_string(text);
    CHECK(back == g);
    CHECK(emit_ttg(back) == text);

    std::string json = emit_graph_json(g);
    CHECK(parse_graph_string(json) == g);

    auto reject = [](const std::string& text) {
        CHECK_THROWS_AS(parse_graph_string(text), FormatError);
    };
    reject("tt 3 1\nterminals 0 1\n0 1\n");
    reject("ttg 3 1\nterminals 0 2\n0 1\n");
    reject("ttg 3 2\nterminals 0 1\n0 2\n0 1\n");   // unsorted
    reject("ttg 3 2\nterminals 0 1\n0 1\n0 1\n");   // duplicate
    reject("ttg 3 1\nterminals 0 1\n1 0\n");        // u < v violated
    reject("ttg 3 2\nterminals 0 1\n0 1\n");        // truncated
    reject("ttg 3 1\nterminals 0 1\n0 5\n");        // out of range

    // line numbers surface in the message
    try {
        parse_graph_string("ttg 3 1\nterminals 0 1\n0 9\n");
        CHECK(false);
    } catch (const FormatError& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
}

TEST_CASE("rational parsing") {
    CHECK(rational_string(parse_rational("2/4")) == "1/2");
    CHECK(rational_string(parse_rational("7")) == "7");
    CHECK_THROWS_AS(parse_rational("0.5"), ParameterError);
    CHECK_THROWS_AS(parse_rational("x"), ParameterError);
    CHECK_THROWS_AS(parse_rational("1/0"), ParameterError);
}
