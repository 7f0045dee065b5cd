#pragma once

#include <string>
#include <vector>

#include "gallai/graph.hpp"

namespace gallai {

// A graph derived from the edge set of a source graph. Vertex i carries the
// i-th edge of the source in lexicographic (u,v) order, so derived indices
// are reproducible across runs.
struct LabeledGraph {
    Graph graph;
    std::vector<Edge> labels;
    int source_n = 0;
};

// Vertices = edges of g; adjacent iff the edges share exactly one endpoint.
LabeledGraph line_graph(const Graph& g);

// Gallai graph: edges adjacent in g that do not span a triangle of g.
LabeledGraph gallai_graph(const Graph& g);

// Anti-Gallai graph: edges adjacent in g that do span a triangle of g;
// the complement of the Gallai graph inside the line graph.
LabeledGraph anti_gallai_graph(const Graph& g);

// A graph G whose Gallai graph contains h as an induced subgraph: apex x
// (the last vertex) adjacent to everything, G - x = complement(h). The
// Gallai vertices labeled xv, mapped xv -> v, induce a copy of h.
struct ApexEmbedding {
    Graph graph;
    int apex = 0;
};
ApexEmbedding apex_embedding(const Graph& h);

// DOT rendering with each derived vertex annotated "u-v" by its source edge.
std::string to_dot(const LabeledGraph& lg);

}  // namespace gallai
