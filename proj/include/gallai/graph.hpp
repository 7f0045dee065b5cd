#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gallai {

// Hard cap on vertex counts; the derived-graph operators square edge counts.
constexpr int kMaxVertices = 1 << 16;

// Unordered vertex pair, stored with the smaller endpoint first.
struct Edge {
    int u = 0;
    int v = 0;

    Edge() = default;
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {
        if (a == b) throw std::invalid_argument("Edge: endpoints must differ");
    }

    bool operator==(const Edge&) const = default;
    auto operator<=>(const Edge&) const = default;
};

using VertexSet = std::vector<int>;  // kept sorted ascending

// Simple undirected graph on vertices 0..n-1. Adjacency is one bit row per
// vertex, so adjacency tests and row intersections are O(n/64). Values are
// treated as immutable once built; every operation below is a pure function.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    bool adjacent(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return (row(u)[static_cast<size_t>(v) >> 6] >> (v & 63)) & 1u;
    }

    void add_edge(int u, int v);

    int degree(int v) const;

    // Raw bit row for vertex v; words_per_row() 64-bit words long.
    const std::uint64_t* row(int v) const {
        return bits_.data() + static_cast<size_t>(v) * static_cast<size_t>(words_);
    }
    int words_per_row() const { return words_; }

    std::vector<int> neighbors(int v) const;  // ascending
    std::vector<Edge> edges() const;          // lexicographic (u,v)

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && bits_ == other.bits_;
    }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("Graph: vertex index out of range");
    }

    int n_ = 0;
    int m_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> bits_;
};

// Parse failure for the text formats; offset is a byte position into the
// input when meaningful, SIZE_MAX otherwise.
struct parse_error : std::runtime_error {
    size_t offset;
    explicit parse_error(const std::string& what, size_t offset_ = SIZE_MAX)
        : std::runtime_error(what), offset(offset_) {}
};

// graph6: size header (1 byte below 63 vertices, '~'+3 bytes up to 258047)
// followed by the upper-triangle adjacency bits in column-major order, six
// bits per printable byte offset by 63.
Graph parse_graph6(const std::string& text);
std::string to_graph6(const Graph& g);

// Edge-list text: first token is n, then one "u v" pair per edge.
// Duplicates collapse; self-loops and out-of-range endpoints are errors.
Graph parse_edge_list(const std::string& text);

Graph induced_subgraph(const Graph& g, const VertexSet& s);
Graph complement(const Graph& g);

bool is_forest(const Graph& g);
bool is_tree(const Graph& g);

std::vector<VertexSet> connected_components(const Graph& g);

// Backtracking isomorphism test, capped at 10 vertices per side.
bool is_isomorphic_small(const Graph& g, const Graph& h);

Graph graph_from_edges(int n, const std::vector<Edge>& edges);

}  // namespace gallai
