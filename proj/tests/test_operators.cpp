#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gallai/harness.hpp"
#include "gallai/operators.hpp"
#include "gallai/recognition.hpp"
#include "oracles.hpp"

using namespace gallai;

namespace {

// disjoint union of a path on a and a path on b
Graph two_paths(int a, int b) {
    Graph g(a + b);
    for (int i = 0; i + 1 < a; ++i) g.add_edge(i, i + 1);
    for (int i = 0; i + 1 < b; ++i) g.add_edge(a + i, a + i + 1);
    return g;
}

}  // namespace

TEST_CASE("line graph examples") {
    CHECK(is_isomorphic_small(line_graph(oracle::path_graph(3)).graph, oracle::path_graph(2)));

    Graph claw(4);
    claw.add_edge(0, 3);
    claw.add_edge(1, 3);
    claw.add_edge(2, 3);
    CHECK(is_isomorphic_small(line_graph(claw).graph, oracle::complete_graph(3)));
    CHECK(is_isomorphic_small(line_graph(oracle::complete_graph(3)).graph,
                              oracle::complete_graph(3)));
    CHECK(line_graph(Graph(4)).graph.vertex_count() == 0);
}

TEST_CASE("labels enumerate the source edges in lexicographic order") {
    Graph g = oracle::cycle_graph(5);
    LabeledGraph lg = gallai_graph(g);
    REQUIRE(lg.labels.size() == 5);
    CHECK(lg.source_n == 5);
    CHECK(std::is_sorted(lg.labels.begin(), lg.labels.end()));
    CHECK(lg.labels == g.edges());
}

TEST_CASE("gallai graph examples") {
    LabeledGraph k3 = gallai_graph(oracle::complete_graph(3));
    CHECK(k3.graph.vertex_count() == 3);
    CHECK(k3.graph.edge_count() == 0);

    // the Gallai graph of a chordless cycle is a cycle of the same length
    for (int k = 4; k <= 8; ++k)
        CHECK(is_isomorphic_small(gallai_graph(oracle::cycle_graph(k)).graph, oracle::cycle_graph(k)));

    // gem: brute-forced over its 21 edge pairs via the definition oracle,
    // then matched against P3 + P4
    const Graph& gem = patterns().gem.graph;
    LabeledGraph lg = gallai_graph(gem);
    REQUIRE(lg.graph.vertex_count() == 7);
    for (int a = 0; a < 7; ++a)
        for (int b = a + 1; b < 7; ++b)
            CHECK(lg.graph.adjacent(a, b) ==
                  oracle::gallai_adjacent_bruteforce(gem, lg.labels[a], lg.labels[b]));
    CHECK(is_isomorphic_small(lg.graph, two_paths(3, 4)));

    // F8minus: a tree on 9 vertices
    LabeledGraph f8m = gallai_graph(patterns().f8minus.graph);
    CHECK(f8m.graph.vertex_count() == 9);
    CHECK(is_tree(f8m.graph));
}

TEST_CASE("anti-Gallai examples") {
    CHECK(anti_gallai_graph(oracle::complete_graph(3)).graph == oracle::complete_graph(3));

    LabeledGraph p3 = anti_gallai_graph(oracle::path_graph(3));
    CHECK(p3.graph.vertex_count() == 2);
    CHECK(p3.graph.edge_count() == 0);

    Graph claw(4);
    claw.add_edge(0, 3);
    claw.add_edge(1, 3);
    claw.add_edge(2, 3);
    CHECK(anti_gallai_graph(claw).graph.edge_count() == 0);
    CHECK(anti_gallai_graph(claw).graph.vertex_count() == 3);
}

TEST_CASE("edge partition and degree identity, exhaustively to n=5") {
    for (int n = 0; n <= 5; ++n)
        enumerate_graphs(n, false, [](const Graph& g) {
            LabeledGraph l = line_graph(g), ga = gallai_graph(g), an = anti_gallai_graph(g);
            const int m = l.graph.vertex_count();
            REQUIRE(ga.graph.vertex_count() == m);
            REQUIRE(an.graph.vertex_count() == m);
            for (int a = 0; a < m; ++a) {
                for (int b = a + 1; b < m; ++b) {
                    const bool union_matches =
                        l.graph.adjacent(a, b) ==
                        (ga.graph.adjacent(a, b) || an.graph.adjacent(a, b));
                    const bool disjoint =
                        !(ga.graph.adjacent(a, b) && an.graph.adjacent(a, b));
                    CHECK(union_matches);
                    CHECK(disjoint);
                }
                const Edge& e = l.labels[a];
                CHECK(l.graph.degree(a) == g.degree(e.u) + g.degree(e.v) - 2);
            }
        });
}

TEST_CASE("gallai heredity under induced subgraphs, exhaustively to n=4") {
    for (int n = 0; n <= 4; ++n)
        enumerate_graphs(n, false, [n](const Graph& g) {
            LabeledGraph big = gallai_graph(g);
            for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
                VertexSet s;
                for (int v = 0; v < n; ++v)
                    if ((mask >> v) & 1) s.push_back(v);
                LabeledGraph small = gallai_graph(induced_subgraph(g, s));
                std::vector<int> idx;
                for (size_t i = 0; i < big.labels.size(); ++i)
                    if (((mask >> big.labels[i].u) & 1) && ((mask >> big.labels[i].v) & 1))
                        idx.push_back(static_cast<int>(i));
                REQUIRE(idx.size() == static_cast<size_t>(small.graph.vertex_count()));
                for (size_t a = 0; a < idx.size(); ++a)
                    for (size_t b = a + 1; b < idx.size(); ++b)
                        CHECK(small.graph.adjacent(static_cast<int>(a), static_cast<int>(b)) ==
                              big.graph.adjacent(idx[a], idx[b]));
            }
        });
}

TEST_CASE("apex embedding examples") {
    // h = K2: the host is P3 and the restricted Gallai graph is an edge
    Graph k2(2);
    k2.add_edge(0, 1);
    ApexEmbedding emb = apex_embedding(k2);
    CHECK(emb.apex == 2);
    CHECK(is_isomorphic_small(emb.graph, oracle::path_graph(3)));

    // h = 2 isolated vertices: the host is K3
    ApexEmbedding emb2 = apex_embedding(Graph(2));
    CHECK(emb2.graph == oracle::complete_graph(3));

    // h = C5
    Graph c5 = oracle::cycle_graph(5);
    ApexEmbedding emb5 = apex_embedding(c5);
    LabeledGraph lg = gallai_graph(emb5.graph);
    std::vector<int> star;
    for (size_t i = 0; i < lg.labels.size(); ++i)
        if (lg.labels[i].v == emb5.apex) star.push_back(static_cast<int>(i));
    REQUIRE(star.size() == 5);
    CHECK(is_isomorphic_small(induced_subgraph(lg.graph, star), c5));
}

TEST_CASE("apex embedding realizes every graph on <= 4 vertices") {
    for (int n = 0; n <= 4; ++n)
        enumerate_graphs(n, false, [](const Graph& h) {
            ApexEmbedding emb = apex_embedding(h);
            LabeledGraph lg = gallai_graph(emb.graph);
            std::vector<int> pi(h.vertex_count(), -1);
            for (size_t i = 0; i < lg.labels.size(); ++i)
                if (lg.labels[i].v == emb.apex) pi[lg.labels[i].u] = static_cast<int>(i);
            for (int u = 0; u < h.vertex_count(); ++u) {
                REQUIRE(pi[u] >= 0);
                for (int v = u + 1; v < h.vertex_count(); ++v)
                    CHECK(lg.graph.adjacent(pi[u], pi[v]) == h.adjacent(u, v));
            }
        });
}

TEST_CASE("dot output carries source edge labels") {
    Graph p3 = oracle::path_graph(3);
    std::string dot = to_dot(gallai_graph(p3));
    CHECK(dot.find("0 [label=\"0-1\"];") != std::string::npos);
    CHECK(dot.find("1 [label=\"1-2\"];") != std::string::npos);
    CHECK(dot.find("0 -- 1;") != std::string::npos);
}
