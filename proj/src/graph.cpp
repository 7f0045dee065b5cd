#include "gallai/graph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace gallai {

Graph::Graph(int n) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    if (n > kMaxVertices) throw std::invalid_argument("Graph: vertex count exceeds 2^16");
    n_ = n;
    words_ = (n + 63) / 64;
    bits_.assign(static_cast<size_t>(n) * static_cast<size_t>(words_), 0);
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("Graph: self-loops are not allowed");
    if (adjacent(u, v)) return;
    bits_[static_cast<size_t>(u) * words_ + (static_cast<size_t>(v) >> 6)] |= 1ull << (v & 63);
    bits_[static_cast<size_t>(v) * words_ + (static_cast<size_t>(u) >> 6)] |= 1ull << (u & 63);
    ++m_;
}

int Graph::degree(int v) const {
    check_vertex(v);
    const std::uint64_t* r = row(v);
    int d = 0;
    for (int w = 0; w < words_; ++w) d += std::popcount(r[w]);
    return d;
}

std::vector<int> Graph::neighbors(int v) const {
    check_vertex(v);
    std::vector<int> out;
    const std::uint64_t* r = row(v);
    for (int w = 0; w < words_; ++w) {
        std::uint64_t bits = r[w];
        while (bits) {
            int b = std::countr_zero(bits);
            out.push_back(w * 64 + b);
            bits &= bits - 1;
        }
    }
    return out;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : neighbors(u))
            if (v > u) out.emplace_back(u, v);
    return out;
}

Graph graph_from_edges(int n, const std::vector<Edge>& edges) {
    Graph g(n);
    for (const Edge& e : edges) g.add_edge(e.u, e.v);
    return g;
}

// ---------------- graph6 ----------------

namespace {

constexpr int kG6Lo = 63;
constexpr int kG6Hi = 126;

int g6_byte(const std::string& text, size_t pos) {
    unsigned char c = static_cast<unsigned char>(text[pos]);
    if (c < kG6Lo || c > kG6Hi)
        throw parse_error("graph6: byte out of range at byte " + std::to_string(pos), pos);
    return c - kG6Lo;
}

}  // namespace

Graph parse_graph6(const std::string& text) {
    if (text.empty()) throw parse_error("graph6: empty input at byte 0", 0);

    size_t pos = 0;
    long long n = 0;
    unsigned char c0 = static_cast<unsigned char>(text[0]);
    if (c0 == 126) {
        if (text.size() >= 2 && static_cast<unsigned char>(text[1]) == 126)
            throw parse_error("graph6: sizes of 258048 or more are unsupported at byte 1", 1);
        if (text.size() < 4) throw parse_error("graph6: truncated size header at byte " +
                                               std::to_string(text.size()), text.size());
        for (size_t i = 1; i <= 3; ++i) n = (n << 6) | g6_byte(text, i);
        pos = 4;
    } else {
        int v = g6_byte(text, 0);
        if (v > 62) throw parse_error("graph6: malformed size header at byte 0", 0);
        n = v;
        pos = 1;
    }
    if (n > kMaxVertices)
        throw parse_error("graph6: vertex count exceeds 2^16 at byte 0", 0);

    const std::uint64_t nbits = static_cast<std::uint64_t>(n) * (n - 1) / 2;
    const size_t nbytes = static_cast<size_t>((nbits + 5) / 6);
    if (text.size() < pos + nbytes)
        throw parse_error("graph6: truncated adjacency data at byte " +
                          std::to_string(text.size()), text.size());

    Graph g(static_cast<int>(n));
    std::uint64_t bit = 0;
    int col_i = 0, col_j = 1;  // next upper-triangle slot, column-major
    for (size_t k = 0; k < nbytes; ++k) {
        int val = g6_byte(text, pos + k);
        for (int t = 5; t >= 0; --t, ++bit) {
            int b = (val >> t) & 1;
            if (bit < nbits) {
                if (b) g.add_edge(col_i, col_j);
                if (++col_i == col_j) {
                    col_i = 0;
                    ++col_j;
                }
            } else if (b) {
                throw parse_error("graph6: nonzero padding bit at byte " +
                                  std::to_string(pos + k), pos + k);
            }
        }
    }
    if (text.size() > pos + nbytes)
        throw parse_error("graph6: trailing garbage at byte " + std::to_string(pos + nbytes),
                          pos + nbytes);
    return g;
}

std::string to_graph6(const Graph& g) {
    const int n = g.vertex_count();
    std::string out;
    if (n < 63) {
        out.push_back(static_cast<char>(n + kG6Lo));
    } else {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(((n >> 12) & 0x3f) + kG6Lo));
        out.push_back(static_cast<char>(((n >> 6) & 0x3f) + kG6Lo));
        out.push_back(static_cast<char>((n & 0x3f) + kG6Lo));
    }
    int acc = 0, filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + kG6Lo));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kG6Lo));
    return out;
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream ss(text);
    long long n = 0;
    if (!(ss >> n)) throw parse_error("edge list: missing vertex count");
    if (n < 0 || n > kMaxVertices)
        throw parse_error("edge list: vertex count out of range: " + std::to_string(n));
    Graph g(static_cast<int>(n));
    long long u = 0, v = 0;
    while (ss >> u) {
        if (!(ss >> v)) throw parse_error("edge list: edge with a single endpoint");
        if (u == v) throw parse_error("edge list: self-loop at vertex " + std::to_string(u));
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw parse_error("edge list: endpoint out of range in \"" + std::to_string(u) +
                              " " + std::to_string(v) + "\"");
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    if (!ss.eof()) throw parse_error("edge list: non-numeric token");
    return g;
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
    VertexSet sorted = s;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int v : sorted)
        if (v < 0 || v >= g.vertex_count())
            throw std::out_of_range("induced_subgraph: vertex out of range");
    Graph h(static_cast<int>(sorted.size()));
    for (size_t i = 0; i < sorted.size(); ++i)
        for (size_t j = i + 1; j < sorted.size(); ++j)
            if (g.adjacent(sorted[i], sorted[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
    return h;
}

Graph complement(const Graph& g) {
    const int n = g.vertex_count();
    Graph h(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) h.add_edge(u, v);
    return h;
}

std::vector<VertexSet> connected_components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<VertexSet> comps;
    std::vector<char> seen(n, 0);
    std::vector<int> queue;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        VertexSet comp;
        queue.assign(1, s);
        seen[s] = 1;
        while (!queue.empty()) {
            int v = queue.back();
            queue.pop_back();
            comp.push_back(v);
            for (int w : g.neighbors(v)) {
                if (!seen[w]) {
                    seen[w] = 1;
                    queue.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;  // discovery from ascending roots => sorted by minimum element
}

bool is_forest(const Graph& g) {
    // DFS back-edge detection, kept independent of the m = n - c identity so
    // that identity stays a testable property.
    const int n = g.vertex_count();
    std::vector<int> state(n, 0);  // 0 unseen, 1 active/seen
    std::vector<int> parent(n, -1);
    struct Frame {
        int v;
        std::vector<int> nbrs;
        size_t i;
    };
    for (int s = 0; s < n; ++s) {
        if (state[s]) continue;
        std::vector<Frame> stack;
        stack.push_back({s, g.neighbors(s), 0});
        state[s] = 1;
        while (!stack.empty()) {
            Frame& fr = stack.back();
            if (fr.i == fr.nbrs.size()) {
                stack.pop_back();
                continue;
            }
            int w = fr.nbrs[fr.i++];
            if (w == parent[fr.v]) continue;
            if (state[w]) return false;
            state[w] = 1;
            parent[w] = fr.v;
            stack.push_back({w, g.neighbors(w), 0});
        }
    }
    return true;
}

bool is_tree(const Graph& g) {
    return g.vertex_count() >= 1 && is_forest(g) && connected_components(g).size() == 1;
}

// ---------------- bounded isomorphism ----------------

bool is_isomorphic_small(const Graph& g, const Graph& h) {
    constexpr int kCap = 10;
    if (g.vertex_count() > kCap || h.vertex_count() > kCap)
        throw std::invalid_argument("is_isomorphic_small: more than 10 vertices");
    const int n = g.vertex_count();
    if (n != h.vertex_count() || g.edge_count() != h.edge_count()) return false;

    std::vector<int> gdeg(n), hdeg(n);
    for (int v = 0; v < n; ++v) {
        gdeg[v] = g.degree(v);
        hdeg[v] = h.degree(v);
    }
    {
        auto a = gdeg, b = hdeg;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return false;
    }

    std::vector<int> img(n, -1);
    std::vector<char> used(n, 0);
    auto dfs = [&](auto&& self, int i) -> bool {
        if (i == n) return true;
        for (int c = 0; c < n; ++c) {
            if (used[c] || hdeg[c] != gdeg[i]) continue;
            bool ok = true;
            for (int j = 0; j < i; ++j) {
                if (g.adjacent(i, j) != h.adjacent(c, img[j])) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            img[i] = c;
            used[c] = 1;
            if (self(self, i + 1)) return true;
            used[c] = 0;
            img[i] = -1;
        }
        return false;
    };
    return dfs(dfs, 0);
}

}  // namespace gallai
