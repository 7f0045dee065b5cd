#pragma once

// Brute-force oracles for the test suites. Everything here decides by
// exhaustive enumeration (subsets, permutations) and stays independent of
// the library's search procedures.

#include <algorithm>
#include <bit>
#include <numeric>
#include <utility>
#include <vector>

#include "gallai/graph.hpp"

namespace oracle {

using gallai::Edge;
using gallai::Graph;
using gallai::VertexSet;

// All permutations, no pruning. Caps at 8 vertices by construction cost.
inline bool isomorphic_bruteforce(const Graph& g, const Graph& h) {
    const int n = g.vertex_count();
    if (n != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int u = 0; ok && u < n; ++u)
            for (int v = u + 1; ok && v < n; ++v)
                ok = g.adjacent(u, v) == h.adjacent(perm[u], perm[v]);
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

inline bool subset_induces_cycle(const Graph& g, const VertexSet& s) {
    Graph h = gallai::induced_subgraph(g, s);
    if (h.vertex_count() < 3 || h.edge_count() != h.vertex_count()) return false;
    for (int v = 0; v < h.vertex_count(); ++v)
        if (h.degree(v) != 2) return false;
    return gallai::connected_components(h).size() == 1;
}

// Chordality by exhaustion: some vertex subset of size >= 4 induces a cycle.
inline bool has_chordless_cycle_bruteforce(const Graph& g) {
    const int n = g.vertex_count();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        VertexSet s;
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1) s.push_back(v);
        if (s.size() >= 4 && subset_induces_cycle(g, s)) return true;
    }
    return false;
}

// Induced containment by exhaustion over vertex subsets.
inline bool contains_induced_bruteforce(const Graph& g, const Graph& p) {
    const int n = g.vertex_count();
    const int k = p.vertex_count();
    if (k > n) return false;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (std::popcount(mask) != k) continue;
        VertexSet s;
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1) s.push_back(v);
        if (isomorphic_bruteforce(gallai::induced_subgraph(g, s), p)) return true;
    }
    return false;
}

inline bool is_homogeneous(const Graph& g, const VertexSet& s) {
    std::vector<char> in(g.vertex_count(), 0);
    for (int v : s) in[v] = 1;
    for (int w = 0; w < g.vertex_count(); ++w) {
        if (in[w]) continue;
        size_t hits = 0;
        for (int v : s)
            if (g.adjacent(w, v)) ++hits;
        if (hits != 0 && hits != s.size()) return false;
    }
    return true;
}

// Every non-trivial homogeneous set that spans an edge, by exhaustion.
inline std::vector<VertexSet> bad_homogeneous_sets_bruteforce(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<VertexSet> out;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        const int size = std::popcount(mask);
        if (size < 2 || size > n - 1) continue;
        VertexSet s;
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1) s.push_back(v);
        bool has_edge = false;
        for (size_t i = 0; i < s.size() && !has_edge; ++i)
            for (size_t j = i + 1; j < s.size() && !has_edge; ++j)
                has_edge = g.adjacent(s[i], s[j]);
        if (has_edge && is_homogeneous(g, s)) out.push_back(std::move(s));
    }
    return out;
}

// Gallai adjacency re-derived from the definition, for comparing whole
// derived graphs against the operators module.
inline bool gallai_adjacent_bruteforce(const Graph& g, const Edge& e, const Edge& f) {
    int shared = -1, x = -1, y = -1;
    for (int a : {e.u, e.v})
        for (int b : {f.u, f.v})
            if (a == b) {
                shared = a;
                x = e.u == a ? e.v : e.u;
                y = f.u == a ? f.v : f.u;
            }
    if (shared < 0) return false;
    return !g.adjacent(x, y);
}

inline Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline Graph cycle_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

inline Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

}  // namespace oracle
