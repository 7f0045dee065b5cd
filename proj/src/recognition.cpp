#include "gallai/recognition.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace gallai {

// ---------------- pattern catalog ----------------

namespace {

Graph make_graph(int n, std::initializer_list<std::pair<int, int>> es) {
    Graph g(n);
    for (auto [u, v] : es) g.add_edge(u, v);
    return g;
}

PatternCatalog make_catalog() {
    PatternCatalog c;
    // Edge lists follow the fixed drawings: F1 claw centered at 3; F2 two
    // triangles glued at 4; F3 hexagon with a K4 on {1,2,4,5}; F4 net with
    // triangle {1,2,4}; F5 3-sun with inner triangle {1,3,4}; F6 diamond
    // with two pendant path edges; F7 gem with a pendant at each P4 end.
    c.f1 = {"F1", make_graph(4, {{0, 3}, {1, 3}, {2, 3}})};
    c.f2 = {"F2", make_graph(5, {{0, 1}, {1, 4}, {0, 4}, {2, 3}, {3, 4}, {2, 4}})};
    c.f3 = {"F3", make_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5},
                                 {1, 4}, {2, 4}, {2, 5}, {1, 5}})};
    c.f4 = {"F4", make_graph(6, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {2, 4}, {4, 5}})};
    c.f5 = {"F5", make_graph(6, {{0, 1}, {1, 2}, {2, 4}, {4, 5}, {3, 5}, {0, 3},
                                 {1, 3}, {3, 4}, {1, 4}})};
    c.f6 = {"F6", make_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 5}, {2, 5}, {3, 5}})};
    c.f7 = {"F7", make_graph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5},
                                 {1, 6}, {2, 6}, {3, 6}, {4, 6}})};
    c.f8 = {"F8", make_graph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 6}, {5, 6}, {4, 5},
                                 {0, 4}, {1, 4}, {1, 5}, {2, 5}, {2, 6}})};
    c.f9 = {"F9", make_graph(7, {{0, 1}, {1, 2}, {2, 5}, {4, 5}, {3, 4}, {0, 3}, {1, 3},
                                 {1, 4}, {2, 4}, {1, 6}, {2, 6}, {3, 6}, {4, 6}})};
    c.f8minus = {"F8minus", make_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5},
                                           {0, 5}, {1, 5}, {1, 4}, {2, 4}})};
    c.gem = {"Gem", make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 4}})};
    return c;
}

}  // namespace

const PatternCatalog& patterns() {
    static const PatternCatalog cat = make_catalog();
    return cat;
}

// ---------------- chordality ----------------

std::vector<int> lex_bfs_order(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> parts;
    if (n > 0) {
        parts.emplace_back(n);
        std::iota(parts[0].begin(), parts[0].end(), 0);
    }
    std::vector<int> order;
    order.reserve(n);
    while (!parts.empty()) {
        int v = parts.front().front();
        parts.front().erase(parts.front().begin());
        if (parts.front().empty()) parts.erase(parts.begin());
        order.push_back(v);
        std::vector<std::vector<int>> next;
        next.reserve(parts.size() * 2);
        for (auto& bucket : parts) {
            std::vector<int> hit, miss;
            for (int x : bucket) (g.adjacent(v, x) ? hit : miss).push_back(x);
            if (!hit.empty()) next.push_back(std::move(hit));
            if (!miss.empty()) next.push_back(std::move(miss));
        }
        parts = std::move(next);
    }
    return order;
}

namespace {

// sigma is a LexBFS visit order; the reverse is a perfect elimination order
// iff every vertex's earlier-visited neighborhood is a clique. The standard
// parent shortcut: check R(v) \ {p} subseteq N(p) for p the latest earlier
// neighbor.
bool peo_verifies(const Graph& g, const std::vector<int>& sigma) {
    const int n = g.vertex_count();
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[sigma[i]] = i;
    Graph h(n);
    for (const Edge& e : g.edges()) h.add_edge(pos[e.u], pos[e.v]);
    const int words = h.words_per_row();
    std::vector<std::uint64_t> earlier(words);
    for (int j = 0; j < n; ++j) {
        const std::uint64_t* rj = h.row(j);
        const int hw = j >> 6;
        for (int w = 0; w < words; ++w) earlier[w] = w < hw ? rj[w] : 0;
        if (j & 63) earlier[hw] = rj[hw] & ((1ull << (j & 63)) - 1);
        int p = -1;
        for (int w = hw; w >= 0 && p < 0; --w)
            if (earlier[w]) p = w * 64 + 63 - std::countl_zero(earlier[w]);
        if (p < 0) continue;
        earlier[p >> 6] &= ~(1ull << (p & 63));
        const std::uint64_t* rp = h.row(p);
        for (int w = 0; w <= hw; ++w)
            if (earlier[w] & ~rp[w]) return false;
    }
    return true;
}

std::vector<int> bfs_path(const Graph& g, int from, int to, const std::vector<char>& allowed) {
    const int n = g.vertex_count();
    std::vector<int> parent(n, -2);
    std::vector<int> queue;
    queue.push_back(from);
    parent[from] = -1;
    for (size_t head = 0; head < queue.size() && parent[to] == -2; ++head) {
        int v = queue[head];
        for (int w : g.neighbors(v)) {
            if (!allowed[w] || parent[w] != -2) continue;
            parent[w] = v;
            queue.push_back(w);
        }
    }
    if (parent[to] == -2) return {};
    std::vector<int> path;
    for (int v = to; v != -1; v = parent[v]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
}

// Deterministic hole extraction: for a vertex v with non-adjacent neighbors
// p, w, a shortest p-w path avoiding N[v] closes into a chordless cycle.
// Every non-chordal graph admits such a triple.
std::vector<int> find_chordless_cycle(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<char> allowed(n, 1);
    for (int v = 0; v < n; ++v) {
        const auto nb = g.neighbors(v);
        for (size_t a = 0; a < nb.size(); ++a) {
            for (size_t b = a + 1; b < nb.size(); ++b) {
                const int p = nb[a], w = nb[b];
                if (g.adjacent(p, w)) continue;
                std::fill(allowed.begin(), allowed.end(), 1);
                allowed[v] = 0;
                for (int x : nb) allowed[x] = 0;
                allowed[p] = allowed[w] = 1;
                auto path = bfs_path(g, p, w, allowed);
                if (path.empty()) continue;
                std::vector<int> cycle;
                cycle.reserve(path.size() + 1);
                cycle.push_back(v);
                cycle.insert(cycle.end(), path.begin(), path.end());
                return cycle;
            }
        }
    }
    return {};
}

// Any cycle (not necessarily induced), as the DFS tree path closed by the
// first back edge.
std::vector<int> find_cycle_vertices(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<char> seen(n, 0);
    std::vector<int> parent(n, -1);
    struct Frame {
        int v;
        std::vector<int> nbrs;
        size_t i;
    };
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<Frame> stack;
        stack.push_back({s, g.neighbors(s), 0});
        seen[s] = 1;
        while (!stack.empty()) {
            Frame& fr = stack.back();
            if (fr.i == fr.nbrs.size()) {
                stack.pop_back();
                continue;
            }
            int w = fr.nbrs[fr.i++];
            if (w == parent[fr.v]) continue;
            if (seen[w]) {
                std::vector<int> cycle;
                for (int x = fr.v; x != w; x = parent[x]) cycle.push_back(x);
                cycle.push_back(w);
                std::reverse(cycle.begin(), cycle.end());
                return cycle;
            }
            seen[w] = 1;
            parent[w] = fr.v;
            int next = w;
            stack.push_back({next, g.neighbors(next), 0});
        }
    }
    return {};
}

}  // namespace

ChordalityResult check_chordality(const Graph& g) {
    auto sigma = lex_bfs_order(g);
    if (peo_verifies(g, sigma)) {
        ChordalityResult r;
        r.peo.assign(sigma.rbegin(), sigma.rend());
        r.verdict = {true, Ok{}};
        return r;
    }
    auto cycle = find_chordless_cycle(g);
    if (cycle.empty())
        throw std::logic_error("check_chordality: verification failed but no hole found");
    return {{false, ChordlessCycle{std::move(cycle)}}, {}};
}

Verdict is_chordal(const Graph& g) { return check_chordality(g).verdict; }

// ---------------- induced pattern search ----------------

std::optional<std::vector<int>> find_induced_pattern(const Graph& g, const Graph& p) {
    const int k = p.vertex_count();
    if (k > 8) throw std::invalid_argument("find_induced_pattern: pattern exceeds 8 vertices");
    const int n = g.vertex_count();
    if (k == 0) return std::vector<int>{};
    if (k > n) return std::nullopt;

    std::vector<int> pdeg(k), gdeg(n);
    for (int i = 0; i < k; ++i) pdeg[i] = p.degree(i);
    for (int v = 0; v < n; ++v) gdeg[v] = g.degree(v);

    std::vector<int> img(k, -1);
    std::vector<char> used(n, 0);
    auto dfs = [&](auto&& self, int i) -> bool {
        for (int c = 0; c < n; ++c) {
            if (used[c] || gdeg[c] < pdeg[i]) continue;
            bool ok = true;
            for (int j = 0; j < i; ++j) {
                if (p.adjacent(j, i) != g.adjacent(img[j], c)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            img[i] = c;
            if (i + 1 == k) return true;
            used[c] = 1;
            if (self(self, i + 1)) return true;
            used[c] = 0;
        }
        img[i] = -1;
        return false;
    };
    if (dfs(dfs, 0)) return img;
    return std::nullopt;
}

// ---------------- homogeneous sets ----------------

std::optional<std::pair<VertexSet, Edge>> find_bad_homogeneous_set(const Graph& g) {
    const int n = g.vertex_count();
    const int words = g.words_per_row();
    std::vector<std::uint64_t> set(words);
    auto contains = [&](int v) { return (set[v >> 6] >> (v & 63)) & 1u; };
    for (const Edge& e : g.edges()) {
        std::fill(set.begin(), set.end(), 0);
        set[e.u >> 6] |= 1ull << (e.u & 63);
        set[e.v >> 6] |= 1ull << (e.v & 63);
        int size = 2;
        // Modular closure: any outside vertex with both a neighbor and a
        // non-neighbor inside must join; the fixpoint is the unique minimal
        // homogeneous set containing the seed edge.
        bool grown = true;
        while (grown) {
            grown = false;
            for (int w = 0; w < n; ++w) {
                if (contains(w)) continue;
                const std::uint64_t* rw = g.row(w);
                bool any = false, all = true;
                for (int t = 0; t < words; ++t) {
                    std::uint64_t x = rw[t] & set[t];
                    if (x) any = true;
                    if (x != set[t]) all = false;
                }
                if (any && !all) {
                    set[w >> 6] |= 1ull << (w & 63);
                    ++size;
                    grown = true;
                }
            }
        }
        if (size < n) {
            VertexSet out;
            out.reserve(size);
            for (int v = 0; v < n; ++v)
                if (contains(v)) out.push_back(v);
            return std::make_pair(std::move(out), e);
        }
    }
    return std::nullopt;
}

// ---------------- blocks ----------------

BlockCutTree block_cut_tree(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) throw std::invalid_argument("block_cut_tree: empty graph");
    if (connected_components(g).size() != 1)
        throw std::invalid_argument("block_cut_tree: graph is not connected");

    BlockCutTree out;
    if (n == 1) return out;

    std::vector<std::vector<int>> adj(n);
    for (int v = 0; v < n; ++v) adj[v] = g.neighbors(v);

    std::vector<int> disc(n, 0), low(n, 0);
    std::vector<char> is_cut(n, 0);
    int timer = 0;
    std::vector<std::pair<int, int>> edge_stack;

    struct RawBlock {
        VertexSet verts;
        Edge min_edge{0, 1};
    };
    std::vector<RawBlock> raw;

    auto pop_block = [&](int u, int v) {
        RawBlock rb;
        bool first = true;
        while (true) {
            auto [a, b] = edge_stack.back();
            edge_stack.pop_back();
            rb.verts.push_back(a);
            rb.verts.push_back(b);
            Edge e(a, b);
            if (first || e < rb.min_edge) rb.min_edge = e;
            first = false;
            if (a == u && b == v) break;
        }
        std::sort(rb.verts.begin(), rb.verts.end());
        rb.verts.erase(std::unique(rb.verts.begin(), rb.verts.end()), rb.verts.end());
        raw.push_back(std::move(rb));
    };

    struct Frame {
        int v;
        int parent;
        size_t i;
    };
    std::vector<Frame> stack;
    int root_children = 0;
    disc[0] = low[0] = ++timer;
    stack.push_back({0, -1, 0});
    while (!stack.empty()) {
        Frame& fr = stack.back();
        if (fr.i < adj[fr.v].size()) {
            const int v = fr.v;
            const int w = adj[v][fr.i++];
            if (w == fr.parent) continue;
            if (disc[w] == 0) {
                edge_stack.push_back({v, w});
                if (v == 0) ++root_children;
                disc[w] = low[w] = ++timer;
                stack.push_back({w, v, 0});
            } else if (disc[w] < disc[v]) {
                edge_stack.push_back({v, w});
                low[v] = std::min(low[v], disc[w]);
            }
        } else {
            const int v = fr.v;
            stack.pop_back();
            if (!stack.empty()) {
                Frame& pf = stack.back();
                low[pf.v] = std::min(low[pf.v], low[v]);
                if (low[v] >= disc[pf.v]) {
                    if (pf.parent != -1) is_cut[pf.v] = 1;
                    pop_block(pf.v, v);
                }
            }
        }
    }
    if (root_children >= 2) is_cut[0] = 1;

    std::sort(raw.begin(), raw.end(),
              [](const RawBlock& a, const RawBlock& b) { return a.min_edge < b.min_edge; });
    for (auto& rb : raw) {
        VertexSet cuts;
        for (int v : rb.verts)
            if (is_cut[v]) cuts.push_back(v);
        out.blocks.push_back(std::move(rb.verts));
        out.block_cut_vertices.push_back(std::move(cuts));
    }
    for (int v = 0; v < n; ++v)
        if (is_cut[v]) out.cut_vertices.push_back(v);
    return out;
}

// ---------------- forest / tree recognizers ----------------

Verdict is_gallai_forest(const Graph& g) {
    ChordalityResult ch = check_chordality(g);
    if (!ch.verdict.answer) return ch.verdict;
    for (const Pattern* p : patterns().forbidden()) {
        if (p->graph.vertex_count() > g.vertex_count()) continue;
        if (auto m = find_induced_pattern(g, p->graph))
            return {false, PatternEmbedding{p->name, std::move(*m)}};
    }
    return {true, Ok{}};
}

Verdict is_gallai_forest_direct(const Graph& g) {
    LabeledGraph lg = gallai_graph(g);
    auto cycle = find_cycle_vertices(lg.graph);
    if (cycle.empty()) return {true, Ok{}};
    std::vector<Edge> labels;
    labels.reserve(cycle.size());
    for (int i : cycle) labels.push_back(lg.labels[i]);
    return {false, GallaiCycle{std::move(labels)}};
}

namespace {

void require_no_isolated(const Graph& g, const char* who) {
    if (g.vertex_count() == 0)
        throw std::invalid_argument(std::string(who) + ": empty graph");
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 0)
            throw std::invalid_argument(std::string(who) + ": isolated vertex " +
                                        std::to_string(v));
}

Edge least_edge_in_component(const Graph& g, const VertexSet& comp) {
    const int u = comp[0];
    return Edge(u, g.neighbors(u)[0]);  // u is the component minimum, so all
                                        // neighbors exceed it
}

}  // namespace

Verdict is_gallai_tree_structural(const Graph& g) {
    require_no_isolated(g, "is_gallai_tree_structural");
    const int n = g.vertex_count();

    auto comps = connected_components(g);
    if (comps.size() > 1)
        return {false, GallaiDisconnection{least_edge_in_component(g, comps[0]),
                                           least_edge_in_component(g, comps[1])}};

    const PatternCatalog& cat = patterns();
    if (n == 6 && is_isomorphic_small(g, cat.f8minus.graph)) return {true, Ok{}};

    BlockCutTree bct = block_cut_tree(g);
    enum class Shape { k2, k3, gem };
    std::vector<Shape> shape(bct.blocks.size());
    for (size_t i = 0; i < bct.blocks.size(); ++i) {
        const VertexSet& blk = bct.blocks[i];
        if (blk.size() == 2) {
            shape[i] = Shape::k2;
        } else if (blk.size() == 3) {
            shape[i] = Shape::k3;  // a 2-connected block on 3 vertices is a triangle
        } else if (blk.size() == 5 &&
                   is_isomorphic_small(induced_subgraph(g, blk), cat.gem.graph)) {
            shape[i] = Shape::gem;
        } else {
            return {false, BlockViolation{blk, "block_shape"}};
        }
    }

    std::vector<int> blocks_at(n, 0);
    for (const VertexSet& blk : bct.blocks)
        for (int v : blk) ++blocks_at[v];
    for (int v : bct.cut_vertices) {
        if (blocks_at[v] > 2) return {false, BlockViolation{{v}, "cut_vertex_too_many_blocks"}};
        if (g.degree(v) > 3) return {false, BlockViolation{{v}, "cut_vertex_degree"}};
    }

    for (size_t i = 0; i < bct.blocks.size(); ++i) {
        const VertexSet& blk = bct.blocks[i];
        const VertexSet& cuts = bct.block_cut_vertices[i];
        if (shape[i] == Shape::k3 && cuts.size() != 2)
            return {false, BlockViolation{blk, "k3_block_cut_vertices"}};
        if (shape[i] == Shape::gem) {
            if (cuts.size() != 1) return {false, BlockViolation{blk, "gem_block_cut_vertices"}};
            int in_block = 0;
            for (int w : blk)
                if (w != cuts[0] && g.adjacent(cuts[0], w)) ++in_block;
            if (in_block != 2)
                return {false, BlockViolation{blk, "gem_block_cut_vertex_degree"}};
        }
    }
    return {true, Ok{}};
}

Verdict is_gallai_tree(const Graph& g, TreeRoute route) {
    require_no_isolated(g, "is_gallai_tree");
    switch (route) {
        case TreeRoute::direct: {
            LabeledGraph lg = gallai_graph(g);
            if (is_tree(lg.graph)) return {true, Ok{}};
            auto cycle = find_cycle_vertices(lg.graph);
            if (!cycle.empty()) {
                std::vector<Edge> labels;
                labels.reserve(cycle.size());
                for (int i : cycle) labels.push_back(lg.labels[i]);
                return {false, GallaiCycle{std::move(labels)}};
            }
            auto comps = connected_components(lg.graph);
            return {false, GallaiDisconnection{lg.labels[comps[0][0]], lg.labels[comps[1][0]]}};
        }
        case TreeRoute::characterization: {
            Verdict forest = is_gallai_forest(g);
            if (!forest.answer) return forest;
            if (auto bad = find_bad_homogeneous_set(g))
                return {false, NonIndependentHomogeneousSet{std::move(bad->first), bad->second}};
            return {true, Ok{}};
        }
        case TreeRoute::structural:
            return is_gallai_tree_structural(g);
    }
    throw std::logic_error("is_gallai_tree: unknown route");
}

// ---------------- certificate checking ----------------

std::string certificate_kind(const Certificate& c) {
    switch (c.index()) {
        case 0: return "ok";
        case 1: return "chordless_cycle";
        case 2: return "pattern_embedding";
        case 3: return "non_independent_homogeneous_set";
        case 4: return "gallai_cycle";
        case 5: return "gallai_disconnection";
        case 6: return "block_violation";
    }
    return "unknown";
}

namespace {

bool vertices_ok(const Graph& g, const std::vector<int>& vs) {
    for (int v : vs)
        if (v < 0 || v >= g.vertex_count()) return false;
    return true;
}

bool all_distinct(std::vector<int> vs) {
    std::sort(vs.begin(), vs.end());
    return std::adjacent_find(vs.begin(), vs.end()) == vs.end();
}

bool valid_chordless_cycle(const Graph& g, const ChordlessCycle& c) {
    const auto& vs = c.vertices;
    const size_t k = vs.size();
    if (k < 4 || !vertices_ok(g, vs) || !all_distinct(vs)) return false;
    for (size_t i = 0; i < k; ++i)
        for (size_t j = i + 1; j < k; ++j) {
            const bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
            if (g.adjacent(vs[i], vs[j]) != consecutive) return false;
        }
    return true;
}

bool valid_pattern_embedding(const Graph& g, const PatternEmbedding& c) {
    const Pattern* pat = nullptr;
    for (const Pattern* p : patterns().all())
        if (p->name == c.pattern) pat = p;
    if (!pat) return false;
    const Graph& p = pat->graph;
    if (static_cast<int>(c.map.size()) != p.vertex_count()) return false;
    if (!vertices_ok(g, c.map) || !all_distinct(c.map)) return false;
    for (int i = 0; i < p.vertex_count(); ++i)
        for (int j = i + 1; j < p.vertex_count(); ++j)
            if (p.adjacent(i, j) != g.adjacent(c.map[i], c.map[j])) return false;
    return true;
}

bool valid_homogeneous(const Graph& g, const NonIndependentHomogeneousSet& c) {
    const int n = g.vertex_count();
    const auto& set = c.set;
    if (set.size() < 2 || static_cast<int>(set.size()) > n - 1) return false;
    if (!vertices_ok(g, set) || !all_distinct(set)) return false;
    std::vector<char> in(n, 0);
    for (int v : set) in[v] = 1;
    if (!in[c.witness.u] || !in[c.witness.v] || !g.adjacent(c.witness.u, c.witness.v))
        return false;
    for (int w = 0; w < n; ++w) {
        if (in[w]) continue;
        size_t hits = 0;
        for (int v : set)
            if (g.adjacent(w, v)) ++hits;
        if (hits != 0 && hits != set.size()) return false;
    }
    return true;
}

bool is_edge_of(const Graph& g, const Edge& e) {
    return e.u >= 0 && e.v < g.vertex_count() && e.u != e.v && g.adjacent(e.u, e.v);
}

// Adjacency in the Gallai graph straight from the definition.
bool gallai_adjacent(const Graph& g, const Edge& e, const Edge& f) {
    int shared = -1, x = -1, y = -1;
    if (e.u == f.u) shared = e.u, x = e.v, y = f.v;
    else if (e.u == f.v) shared = e.u, x = e.v, y = f.u;
    else if (e.v == f.u) shared = e.v, x = e.u, y = f.v;
    else if (e.v == f.v) shared = e.v, x = e.u, y = f.u;
    if (shared < 0 || x == y) return false;
    return !g.adjacent(x, y);
}

bool valid_gallai_cycle(const Graph& g, const GallaiCycle& c) {
    const auto& ls = c.labels;
    const size_t k = ls.size();
    if (k < 3) return false;
    std::vector<Edge> sorted = ls;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (const Edge& e : ls)
        if (!is_edge_of(g, e)) return false;
    for (size_t i = 0; i < k; ++i)
        if (!gallai_adjacent(g, ls[i], ls[(i + 1) % k])) return false;
    return true;
}

bool valid_gallai_disconnection(const Graph& g, const GallaiDisconnection& c) {
    if (!is_edge_of(g, c.a) || !is_edge_of(g, c.b) || c.a == c.b) return false;
    LabeledGraph lg = gallai_graph(g);
    auto index_of = [&](const Edge& e) {
        auto it = std::lower_bound(lg.labels.begin(), lg.labels.end(), e);
        return static_cast<int>(it - lg.labels.begin());
    };
    const int ia = index_of(c.a), ib = index_of(c.b);
    std::vector<int> comp(lg.graph.vertex_count(), -1);
    auto comps = connected_components(lg.graph);
    for (size_t ci = 0; ci < comps.size(); ++ci)
        for (int v : comps[ci]) comp[v] = static_cast<int>(ci);
    return comp[ia] != comp[ib];
}

bool valid_block_violation(const Graph& g, const BlockViolation& c) {
    if (connected_components(g).size() != 1) return false;
    BlockCutTree bct = block_cut_tree(g);
    const PatternCatalog& cat = patterns();

    auto block_index = [&]() -> int {
        for (size_t i = 0; i < bct.blocks.size(); ++i)
            if (bct.blocks[i] == c.vertices) return static_cast<int>(i);
        return -1;
    };
    auto is_gem_block = [&](const VertexSet& blk) {
        return blk.size() == 5 && is_isomorphic_small(induced_subgraph(g, blk), cat.gem.graph);
    };

    if (c.condition == "block_shape") {
        int i = block_index();
        if (i < 0) return false;
        const VertexSet& blk = bct.blocks[i];
        return blk.size() != 2 && blk.size() != 3 && !is_gem_block(blk);
    }
    if (c.condition == "cut_vertex_too_many_blocks" || c.condition == "cut_vertex_degree") {
        if (c.vertices.size() != 1) return false;
        const int v = c.vertices[0];
        if (!std::binary_search(bct.cut_vertices.begin(), bct.cut_vertices.end(), v))
            return false;
        if (c.condition == "cut_vertex_degree") return g.degree(v) > 3;
        int count = 0;
        for (const VertexSet& blk : bct.blocks)
            if (std::binary_search(blk.begin(), blk.end(), v)) ++count;
        return count > 2;
    }
    if (c.condition == "k3_block_cut_vertices") {
        int i = block_index();
        return i >= 0 && bct.blocks[i].size() == 3 && bct.block_cut_vertices[i].size() != 2;
    }
    if (c.condition == "gem_block_cut_vertices") {
        int i = block_index();
        return i >= 0 && is_gem_block(bct.blocks[i]) && bct.block_cut_vertices[i].size() != 1;
    }
    if (c.condition == "gem_block_cut_vertex_degree") {
        int i = block_index();
        if (i < 0 || !is_gem_block(bct.blocks[i])) return false;
        if (bct.block_cut_vertices[i].size() != 1) return false;
        const int u = bct.block_cut_vertices[i][0];
        int in_block = 0;
        for (int w : bct.blocks[i])
            if (w != u && g.adjacent(u, w)) ++in_block;
        return in_block != 2;
    }
    return false;
}

}  // namespace

bool certificate_valid(const Graph& g, const Certificate& c) {
    return std::visit(
        [&](const auto& cert) -> bool {
            using T = std::decay_t<decltype(cert)>;
            if constexpr (std::is_same_v<T, Ok>) {
                return true;
            } else if constexpr (std::is_same_v<T, ChordlessCycle>) {
                return valid_chordless_cycle(g, cert);
            } else if constexpr (std::is_same_v<T, PatternEmbedding>) {
                return valid_pattern_embedding(g, cert);
            } else if constexpr (std::is_same_v<T, NonIndependentHomogeneousSet>) {
                return valid_homogeneous(g, cert);
            } else if constexpr (std::is_same_v<T, GallaiCycle>) {
                return valid_gallai_cycle(g, cert);
            } else if constexpr (std::is_same_v<T, GallaiDisconnection>) {
                return valid_gallai_disconnection(g, cert);
            } else {
                return valid_block_violation(g, cert);
            }
        },
        c);
}

bool verdict_consistent(const Graph& g, const Verdict& v) {
    if (v.answer != std::holds_alternative<Ok>(v.certificate)) return false;
    return certificate_valid(g, v.certificate);
}

}  // namespace gallai
