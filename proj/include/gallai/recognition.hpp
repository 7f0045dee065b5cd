#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "gallai/graph.hpp"
#include "gallai/operators.hpp"

namespace gallai {

// ---------------- certificates ----------------

struct Ok {
    bool operator==(const Ok&) const = default;
};
struct ChordlessCycle {
    std::vector<int> vertices;  // cyclic order, length >= 4, induced in g
    bool operator==(const ChordlessCycle&) const = default;
};
struct PatternEmbedding {
    std::string pattern;   // catalog name, e.g. "F1"
    std::vector<int> map;  // map[i] = image of pattern vertex i in g
    bool operator==(const PatternEmbedding&) const = default;
};
struct NonIndependentHomogeneousSet {
    VertexSet set;  // homogeneous in g, 2 <= |set| <= n-1
    Edge witness;   // an edge of g inside set
    bool operator==(const NonIndependentHomogeneousSet&) const = default;
};
struct GallaiCycle {
    std::vector<Edge> labels;  // source-edge labels tracing a cycle in gallai_graph(g)
    bool operator==(const GallaiCycle&) const = default;
};
struct GallaiDisconnection {
    Edge a, b;  // labels lying in distinct components of gallai_graph(g)
    bool operator==(const GallaiDisconnection&) const = default;
};
struct BlockViolation {
    VertexSet vertices;     // the offending block, or a singleton cut-vertex
    std::string condition;  // which structural condition failed
    bool operator==(const BlockViolation&) const = default;
};

using Certificate = std::variant<Ok, ChordlessCycle, PatternEmbedding,
                                 NonIndependentHomogeneousSet, GallaiCycle,
                                 GallaiDisconnection, BlockViolation>;

struct Verdict {
    bool answer = false;
    Certificate certificate = Ok{};
};

std::string certificate_kind(const Certificate& c);

// Re-checks a certificate against the graph it was issued for.
bool certificate_valid(const Graph& g, const Certificate& c);

// answer <=> certificate is Ok, and the certificate re-validates.
bool verdict_consistent(const Graph& g, const Verdict& v);

// ---------------- pattern catalog ----------------

struct Pattern {
    std::string name;
    Graph graph;
};

// The nine forbidden subgraphs plus the two auxiliary patterns, with fixed
// vertex labelings transcribed from their drawings.
struct PatternCatalog {
    Pattern f1, f2, f3, f4, f5, f6, f7, f8, f9;
    Pattern f8minus;
    Pattern gem;

    std::array<const Pattern*, 9> forbidden() const {
        return {&f1, &f2, &f3, &f4, &f5, &f6, &f7, &f8, &f9};
    }
    std::array<const Pattern*, 11> all() const {
        return {&f1, &f2, &f3, &f4, &f5, &f6, &f7, &f8, &f9, &f8minus, &gem};
    }
};

const PatternCatalog& patterns();

// ---------------- primitive recognizers ----------------

struct ChordalityResult {
    Verdict verdict;
    std::vector<int> peo;  // elimination order when chordal, empty otherwise
};

std::vector<int> lex_bfs_order(const Graph& g);
ChordalityResult check_chordality(const Graph& g);
Verdict is_chordal(const Graph& g);

// Least induced embedding of p into g (lexicographic image tuple under the
// pattern's vertex order), or nullopt. Pattern capped at 8 vertices.
std::optional<std::vector<int>> find_induced_pattern(const Graph& g, const Graph& p);

// Smallest homogeneous set through each edge via modular closure; returns
// the first proper one together with its seed edge.
std::optional<std::pair<VertexSet, Edge>> find_bad_homogeneous_set(const Graph& g);

struct BlockCutTree {
    std::vector<VertexSet> blocks;                // sorted by minimum contained edge
    VertexSet cut_vertices;                       // ascending
    std::vector<VertexSet> block_cut_vertices;    // per block, ascending
};

BlockCutTree block_cut_tree(const Graph& g);  // requires connected input

// ---------------- Gallai forest / tree decisions ----------------

// Forbidden-subgraph route: chordal and F1..F9-free.
Verdict is_gallai_forest(const Graph& g);

// Oracle route: construct gallai_graph(g) and look for a cycle.
Verdict is_gallai_forest_direct(const Graph& g);

// Block-structure route; requires no isolated vertices.
Verdict is_gallai_tree_structural(const Graph& g);

enum class TreeRoute { direct, characterization, structural };

Verdict is_gallai_tree(const Graph& g, TreeRoute route);

}  // namespace gallai
