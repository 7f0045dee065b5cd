#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gallai/graph.hpp"
#include "gallai/harness.hpp"
#include "oracles.hpp"

using namespace gallai;

TEST_CASE("graph6 decodes the documented examples") {
    // "Bw": hand decode per the format, n=3, bits 111 -> K3
    Graph k3 = parse_graph6("Bw");
    CHECK(k3.vertex_count() == 3);
    CHECK(k3.edge_count() == 3);
    CHECK(k3.adjacent(0, 1));
    CHECK(k3.adjacent(0, 2));
    CHECK(k3.adjacent(1, 2));
    CHECK(to_graph6(k3) == "Bw");

    Graph two = parse_graph6("A?");
    CHECK(two.vertex_count() == 2);
    CHECK(two.edge_count() == 0);
    CHECK(to_graph6(two) == "A?");

    Graph one = parse_graph6("@");
    CHECK(one.vertex_count() == 1);
    CHECK(one.edge_count() == 0);

    Graph zero = parse_graph6("?");
    CHECK(zero.vertex_count() == 0);
}

TEST_CASE("graph6 long size header round-trips") {
    Graph g(100);
    g.add_edge(0, 99);
    g.add_edge(42, 43);
    std::string enc = to_graph6(g);
    CHECK(enc[0] == '~');
    CHECK(enc.size() == 4 + (100 * 99 / 2 + 5) / 6);
    CHECK(parse_graph6(enc) == g);
}

TEST_CASE("graph6 header length switches at 63 vertices") {
    Graph small(62);
    small.add_edge(0, 61);
    std::string enc62 = to_graph6(small);
    CHECK(enc62[0] != '~');
    CHECK(parse_graph6(enc62) == small);

    Graph big(63);
    big.add_edge(0, 62);
    std::string enc63 = to_graph6(big);
    REQUIRE(enc63.size() >= 4);
    CHECK(enc63[0] == '~');
    CHECK(enc63[1] == '?');  // 63 = 0,0,63 in 6-bit chunks
    CHECK(parse_graph6(enc63) == big);
}

TEST_CASE("graph6 parse errors name a byte offset") {
    CHECK_THROWS_AS(parse_graph6(""), parse_error);
    CHECK_THROWS_WITH(parse_graph6("B"), doctest::Contains("byte 1"));
    CHECK_THROWS_WITH(parse_graph6("Bw "), doctest::Contains("byte 2"));  // trailing garbage
    CHECK_THROWS_WITH(parse_graph6("B\x20w"), doctest::Contains("byte 1"));
    CHECK_THROWS_WITH(parse_graph6("~~????"), doctest::Contains("byte 1"));
    // padding bits must be zero: n=2 needs 1 adjacency bit, 5 padding bits
    CHECK_THROWS_WITH(parse_graph6("A@"), doctest::Contains("padding"));
    CHECK_THROWS_AS(parse_graph6("Bw\nBw"), parse_error);
}

TEST_CASE("graph6 round-trip is the identity over every labeled graph, n <= 5") {
    for (int n = 0; n <= 5; ++n) {
        enumerate_graphs(n, false, [](const Graph& g) {
            CHECK(parse_graph6(to_graph6(g)) == g);
        });
    }
}

TEST_CASE("edge list parsing") {
    Graph p4 = parse_edge_list("4\n0 1\n1 2\n2 3");
    CHECK(p4 == oracle::path_graph(4));

    Graph dup = parse_edge_list("3\n0 1\n0 1");
    CHECK(dup.edge_count() == 1);
    CHECK(dup.vertex_count() == 3);
    CHECK(dup.degree(2) == 0);

    CHECK_THROWS_WITH(parse_edge_list("2\n0 0"), doctest::Contains("self-loop"));
    CHECK_THROWS_WITH(parse_edge_list("2\n0 5"), doctest::Contains("out of range"));
    CHECK_THROWS_AS(parse_edge_list("2\n0"), parse_error);
    CHECK_THROWS_AS(parse_edge_list("2\n0 x"), parse_error);
    CHECK_THROWS_AS(parse_edge_list(""), parse_error);
}

TEST_CASE("induced subgraphs relabel ascending") {
    Graph c5 = oracle::cycle_graph(5);
    CHECK(induced_subgraph(c5, {0, 1, 2, 3}) == oracle::path_graph(4));
    CHECK(induced_subgraph(c5, {0, 1, 2, 3, 4}) == c5);
    CHECK(induced_subgraph(oracle::complete_graph(4), {0, 1, 2}) == oracle::complete_graph(3));
    CHECK(induced_subgraph(c5, {}).vertex_count() == 0);
    CHECK_THROWS_AS(induced_subgraph(c5, {7}), std::out_of_range);
}

TEST_CASE("complement basics and involution") {
    Graph k3bar = complement(oracle::complete_graph(3));
    CHECK(k3bar.edge_count() == 0);
    CHECK(k3bar.vertex_count() == 3);

    // C5 is self-complementary (checked against the 120-permutation oracle too)
    Graph c5 = oracle::cycle_graph(5);
    CHECK(oracle::isomorphic_bruteforce(complement(c5), c5));
    CHECK(is_isomorphic_small(complement(c5), c5));

    for (int n = 0; n <= 5; ++n)
        enumerate_graphs(n, false, [](const Graph& g) {
            CHECK(complement(complement(g)) == g);
        });
}

TEST_CASE("forest and tree predicates") {
    CHECK(is_forest(oracle::path_graph(4)));
    CHECK(is_tree(oracle::path_graph(4)));
    CHECK_FALSE(is_forest(oracle::complete_graph(3)));

    Graph two_edges(4);
    two_edges.add_edge(0, 1);
    two_edges.add_edge(2, 3);
    CHECK(is_forest(two_edges));
    CHECK_FALSE(is_tree(two_edges));

    CHECK(is_forest(Graph(0)));
    CHECK_FALSE(is_tree(Graph(0)));
    CHECK(is_tree(Graph(1)));
}

TEST_CASE("forest predicate matches the edge-count identity, exhaustively to n=5") {
    for (int n = 0; n <= 5; ++n)
        enumerate_graphs(n, false, [](const Graph& g) {
            const bool identity = static_cast<size_t>(g.edge_count()) ==
                                  g.vertex_count() - connected_components(g).size();
            CHECK(is_forest(g) == identity);
            if (is_tree(g)) CHECK(is_forest(g));
        });
}

TEST_CASE("connected components are sorted by minimum element") {
    auto comps = connected_components(oracle::path_graph(3));
    REQUIRE(comps.size() == 1);
    CHECK(comps[0] == VertexSet{0, 1, 2});

    CHECK(connected_components(Graph(3)).size() == 3);

    Graph g(5);  // K3 + K2
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    g.add_edge(3, 4);
    comps = connected_components(g);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == VertexSet{0, 1, 2});
    CHECK(comps[1] == VertexSet{3, 4});
}

TEST_CASE("bounded isomorphism agrees with the permutation oracle") {
    Graph claw(4);
    claw.add_edge(0, 3);
    claw.add_edge(1, 3);
    claw.add_edge(2, 3);
    CHECK_FALSE(is_isomorphic_small(claw, oracle::complete_graph(3)));
    CHECK_FALSE(is_isomorphic_small(claw, oracle::path_graph(4)));

    // relabeled copy
    Graph relabeled(4);
    relabeled.add_edge(2, 0);
    relabeled.add_edge(3, 0);
    relabeled.add_edge(1, 0);
    CHECK(is_isomorphic_small(claw, relabeled));

    for (std::uint64_t a = 0; a < 64; ++a) {
        Graph g = graph_from_bitvector(4, a);
        for (std::uint64_t b = 0; b < 64; ++b) {
            Graph h = graph_from_bitvector(4, b);
            CHECK(is_isomorphic_small(g, h) == oracle::isomorphic_bruteforce(g, h));
        }
    }

    CHECK_THROWS_AS(is_isomorphic_small(Graph(11), Graph(11)), std::invalid_argument);
}

TEST_CASE("graph invariants are enforced") {
    Graph g(3);
    CHECK_THROWS_AS(g.add_edge(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 3), std::out_of_range);
    CHECK_THROWS_AS(Graph(kMaxVertices + 1), std::invalid_argument);
    CHECK_THROWS_AS(Edge(2, 2), std::invalid_argument);
    CHECK(Edge(5, 2) == Edge(2, 5));
}
