#include "gallai/operators.hpp"

#include <sstream>

namespace gallai {

namespace {

enum class DerivedKind { line, gallai, anti_gallai };

LabeledGraph derive(const Graph& g, DerivedKind kind) {
    LabeledGraph out;
    out.labels = g.edges();
    out.source_n = g.vertex_count();
    const int m = static_cast<int>(out.labels.size());
    out.graph = Graph(m);

    // Edges sharing vertex v are exactly the pairs from v's incidence list;
    // two distinct edges of a simple graph share at most one endpoint.
    std::vector<std::vector<int>> incident(g.vertex_count());
    for (int i = 0; i < m; ++i) {
        incident[out.labels[i].u].push_back(i);
        incident[out.labels[i].v].push_back(i);
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto& inc = incident[v];
        for (size_t a = 0; a < inc.size(); ++a) {
            const Edge& ea = out.labels[inc[a]];
            const int x = ea.u == v ? ea.v : ea.u;
            for (size_t b = a + 1; b < inc.size(); ++b) {
                const Edge& eb = out.labels[inc[b]];
                const int y = eb.u == v ? eb.v : eb.u;
                const bool triangle = g.adjacent(x, y);
                const bool keep = kind == DerivedKind::line ||
                                  (kind == DerivedKind::gallai ? !triangle : triangle);
                if (keep) out.graph.add_edge(inc[a], inc[b]);
            }
        }
    }
    return out;
}

}  // namespace

LabeledGraph line_graph(const Graph& g) { return derive(g, DerivedKind::line); }
LabeledGraph gallai_graph(const Graph& g) { return derive(g, DerivedKind::gallai); }
LabeledGraph anti_gallai_graph(const Graph& g) { return derive(g, DerivedKind::anti_gallai); }

ApexEmbedding apex_embedding(const Graph& h) {
    const int n = h.vertex_count();
    if (n + 1 > kMaxVertices) throw std::invalid_argument("apex_embedding: graph too large");
    Graph g(n + 1);
    for (int u = 0; u < n; ++u) {
        g.add_edge(u, n);
        for (int v = u + 1; v < n; ++v)
            if (!h.adjacent(u, v)) g.add_edge(u, v);
    }
    return {std::move(g), n};
}

std::string to_dot(const LabeledGraph& lg) {
    std::ostringstream out;
    out << "graph G {\n";
    for (int i = 0; i < lg.graph.vertex_count(); ++i)
        out << "  " << i << " [label=\"" << lg.labels[i].u << "-" << lg.labels[i].v << "\"];\n";
    for (const Edge& e : lg.graph.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace gallai
