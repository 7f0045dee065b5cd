#include "gallai/harness.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <ostream>
#include <thread>

#include "json.hpp"

#include "gallai/operators.hpp"
#include "gallai/recognition.hpp"

namespace gallai {

// ---------------- bit-vector enumeration ----------------

std::uint64_t labeled_graph_count(int n) {
    if (n < 0) throw std::invalid_argument("labeled_graph_count: negative n");
    const std::uint64_t m = static_cast<std::uint64_t>(n) * (n - 1) / 2;
    if (m > 63) throw std::invalid_argument("labeled_graph_count: 2^C(n,2) overflows");
    return 1ull << m;
}

Graph graph_from_bitvector(int n, std::uint64_t bits) {
    const int m = n * (n - 1) / 2;
    if (m > 63) throw std::invalid_argument("graph_from_bitvector: n too large");
    if (m < 64 && (bits >> m) != 0)
        throw std::invalid_argument("graph_from_bitvector: bits out of range");
    Graph g(n);
    int k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k)
            if ((bits >> (m - 1 - k)) & 1) g.add_edge(i, j);
    return g;
}

std::uint64_t bitvector_of(const Graph& g) {
    const int n = g.vertex_count();
    const int m = n * (n - 1) / 2;
    if (m > 63) throw std::invalid_argument("bitvector_of: graph too large");
    std::uint64_t bits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) bits = (bits << 1) | (g.adjacent(i, j) ? 1 : 0);
    return bits;
}

namespace {

struct SmallGraph {
    int n = 0;
    std::array<std::uint32_t, 12> adj{};
};

SmallGraph small_from_bits(int n, std::uint64_t bits) {
    SmallGraph s;
    s.n = n;
    const int m = n * (n - 1) / 2;
    int k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k)
            if ((bits >> (m - 1 - k)) & 1) {
                s.adj[i] |= 1u << j;
                s.adj[j] |= 1u << i;
            }
    return s;
}

// True iff no vertex ordering yields a lexicographically smaller bit string.
// Only orderings that tie with the given string column by column are
// explored; any strictly smaller column ends the search.
bool is_canonical(const SmallGraph& s, std::uint64_t bits) {
    const int n = s.n;
    const int m = n * (n - 1) / 2;
    std::array<int, 12> perm{};
    std::uint32_t used = 0;
    auto dfs = [&](auto&& self, int d) -> bool {
        if (d == n) return true;
        const std::uint32_t target =
            d == 0 ? 0
                   : static_cast<std::uint32_t>((bits >> (m - d * (d + 1) / 2)) &
                                                ((1ull << d) - 1));
        for (int x = 0; x < n; ++x) {
            if ((used >> x) & 1) continue;
            std::uint32_t col = 0;
            for (int i = 0; i < d; ++i) col = (col << 1) | ((s.adj[x] >> perm[i]) & 1);
            if (col > target) continue;
            if (col < target) return false;
            perm[d] = x;
            used |= 1u << x;
            const bool ok = self(self, d + 1);
            used &= ~(1u << x);
            if (!ok) return false;
        }
        return true;
    };
    return dfs(dfs, 0);
}

}  // namespace

std::vector<std::uint64_t> enumerate_canonical_bitvectors(int n) {
    if (n < 0 || n > 9)
        throw std::invalid_argument("enumerate_canonical_bitvectors: capped at 9 vertices");
    std::vector<std::uint64_t> cur{0};
    for (int k = 2; k <= n; ++k) {
        std::vector<std::uint64_t> next;
        for (std::uint64_t prev : cur) {
            for (std::uint32_t ext = 0; ext < (1u << (k - 1)); ++ext) {
                const std::uint64_t bits = (prev << (k - 1)) | ext;
                if (is_canonical(small_from_bits(k, bits), bits)) next.push_back(bits);
            }
        }
        cur = std::move(next);
    }
    return cur;  // ascending by construction
}

void enumerate_graphs(int n, bool dedup, const std::function<void(const Graph&)>& fn) {
    if (n < 0) throw std::invalid_argument("enumerate_graphs: negative n");
    if (!dedup) {
        if (n > 8) throw std::invalid_argument("enumerate_graphs: labeled mode capped at 8");
        const std::uint64_t total = labeled_graph_count(n);
        for (std::uint64_t x = 0; x < total; ++x) fn(graph_from_bitvector(n, x));
    } else {
        if (n > 9) throw std::invalid_argument("enumerate_graphs: dedup mode capped at 9");
        for (std::uint64_t bits : enumerate_canonical_bitvectors(n))
            fn(graph_from_bitvector(n, bits));
    }
}

// ---------------- chunked sweep driver ----------------

namespace {

struct ChunkOut {
    std::uint64_t checked = 0;
    std::vector<Mismatch> mismatches;
};

using RangeFn = std::function<void(std::uint64_t, std::uint64_t, ChunkOut&)>;

// Fixed-size chunks processed by a worker pool, merged in range order, so
// reports are byte-identical for any worker count.
void run_chunked(std::uint64_t total, int threads, const RangeFn& range_fn,
                 CrosscheckReport& rep) {
    constexpr std::uint64_t kChunk = 4096;
    if (total == 0) return;
    const std::uint64_t nchunks = (total + kChunk - 1) / kChunk;
    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
    threads = static_cast<int>(std::min<std::uint64_t>(threads, nchunks));

    if (threads == 1) {
        ChunkOut out;
        range_fn(0, total, out);
        rep.graphs_checked += out.checked;
        for (auto& m : out.mismatches) rep.mismatches.push_back(std::move(m));
        return;
    }

    std::vector<ChunkOut> results(nchunks);
    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
        while (true) {
            const std::uint64_t c = next.fetch_add(1);
            if (c >= nchunks) break;
            const std::uint64_t lo = c * kChunk;
            const std::uint64_t hi = std::min(total, lo + kChunk);
            range_fn(lo, hi, results[c]);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    for (auto& out : results) {
        rep.graphs_checked += out.checked;
        for (auto& m : out.mismatches) rep.mismatches.push_back(std::move(m));
    }
}

// checker returns whether the graph counted toward the sweep (skips stay
// uncounted).
using Checker = std::function<bool(const Graph&, std::vector<Mismatch>&)>;

CrosscheckReport run_crosscheck(int n_max, SweepOptions opt, const Checker& check) {
    const auto t0 = std::chrono::steady_clock::now();
    CrosscheckReport rep;
    rep.n_max = n_max;
    for (int n = 1; n <= n_max; ++n) {
        if (opt.dedup) {
            const auto canon = enumerate_canonical_bitvectors(n);
            run_chunked(
                canon.size(), opt.threads,
                [&](std::uint64_t lo, std::uint64_t hi, ChunkOut& out) {
                    for (std::uint64_t i = lo; i < hi; ++i) {
                        Graph g = graph_from_bitvector(n, canon[i]);
                        if (check(g, out.mismatches)) ++out.checked;
                    }
                },
                rep);
        } else {
            run_chunked(
                labeled_graph_count(n), opt.threads,
                [&](std::uint64_t lo, std::uint64_t hi, ChunkOut& out) {
                    for (std::uint64_t x = lo; x < hi; ++x) {
                        Graph g = graph_from_bitvector(n, x);
                        if (check(g, out.mismatches)) ++out.checked;
                    }
                },
                rep);
        }
    }
    rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    return rep;
}

void check_cap(const char* what, int n_max, bool dedup, int labeled_cap, int dedup_cap) {
    const int cap = dedup ? dedup_cap : labeled_cap;
    if (n_max < 1 || n_max > cap)
        throw std::invalid_argument(std::string(what) + ": n_max must be in 1.." +
                                    std::to_string(cap) +
                                    (dedup ? " (dedup)" : " (labeled)"));
}

bool has_isolated_vertex(const Graph& g) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 0) return true;
    return false;
}

}  // namespace

CrosscheckReport crosscheck_thm1(int n_max, SweepOptions opt) {
    check_cap("crosscheck thm1", n_max, opt.dedup, 7, 8);
    return run_crosscheck(n_max, opt, [](const Graph& g, std::vector<Mismatch>& mm) {
        const bool direct = is_forest(gallai_graph(g).graph);
        const bool characterization = is_gallai_forest(g).answer;
        if (direct != characterization)
            mm.push_back({to_graph6(g),
                          "thm1",
                          {{"direct", direct}, {"characterization", characterization}},
                          ""});
        return true;
    });
}

CrosscheckReport crosscheck_thm2(int n_max, SweepOptions opt) {
    check_cap("crosscheck thm2", n_max, opt.dedup, 7, 8);
    return run_crosscheck(n_max, opt, [](const Graph& g, std::vector<Mismatch>& mm) {
        if (has_isolated_vertex(g)) return false;
        const bool direct = is_gallai_tree(g, TreeRoute::direct).answer;
        const bool characterization = is_gallai_tree(g, TreeRoute::characterization).answer;
        const bool structural = is_gallai_tree(g, TreeRoute::structural).answer;
        if (direct != characterization || characterization != structural)
            mm.push_back({to_graph6(g),
                          "thm2",
                          {{"direct", direct},
                           {"characterization", characterization},
                           {"structural", structural}},
                          ""});
        return true;
    });
}

CrosscheckReport crosscheck_prop1(int n_max, SweepOptions opt) {
    check_cap("crosscheck prop1", n_max, opt.dedup, 7, 8);
    return run_crosscheck(n_max, opt, [](const Graph& g, std::vector<Mismatch>& mm) {
        if (has_isolated_vertex(g)) return false;
        const bool connected = connected_components(gallai_graph(g).graph).size() <= 1;
        const bool independent = !find_bad_homogeneous_set(g).has_value();
        if (connected != independent)
            mm.push_back({to_graph6(g),
                          "prop1",
                          {{"gallai_connected", connected},
                           {"homogeneous_sets_independent", independent}},
                          ""});
        return true;
    });
}

CrosscheckReport crosscheck_heredity(int n_max, SweepOptions opt) {
    check_cap("crosscheck heredity", n_max, opt.dedup, 6, 6);
    return run_crosscheck(n_max, opt, [](const Graph& g, std::vector<Mismatch>& mm) {
        const int n = g.vertex_count();
        const LabeledGraph big = gallai_graph(g);
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            VertexSet s;
            for (int v = 0; v < n; ++v)
                if ((mask >> v) & 1) s.push_back(v);
            const LabeledGraph small = gallai_graph(induced_subgraph(g, s));

            std::vector<int> idx;  // big labels inside s, in label order
            for (size_t i = 0; i < big.labels.size(); ++i) {
                const Edge& e = big.labels[i];
                if (((mask >> e.u) & 1) && ((mask >> e.v) & 1)) idx.push_back(static_cast<int>(i));
            }
            bool ok = idx.size() == static_cast<size_t>(small.graph.vertex_count());
            for (size_t a = 0; ok && a < idx.size(); ++a)
                for (size_t b = a + 1; ok && b < idx.size(); ++b)
                    ok = small.graph.adjacent(static_cast<int>(a), static_cast<int>(b)) ==
                         big.graph.adjacent(idx[a], idx[b]);
            if (!ok) {
                mm.push_back({to_graph6(g),
                              "heredity",
                              {{"label_map_isomorphic", false}},
                              "subset_mask=" + std::to_string(mask)});
                return true;
            }
        }
        return true;
    });
}

CrosscheckReport crosscheck_embedding(int n_max, SweepOptions opt) {
    check_cap("crosscheck embedding", n_max, true, 5, 5);
    opt.dedup = true;  // swept over isomorphism classes
    return run_crosscheck(n_max, opt, [](const Graph& h, std::vector<Mismatch>& mm) {
        const ApexEmbedding emb = apex_embedding(h);
        const LabeledGraph lg = gallai_graph(emb.graph);
        const int n = h.vertex_count();
        std::vector<int> pi(n, -1);  // v -> Gallai vertex labeled {v, apex}
        for (size_t i = 0; i < lg.labels.size(); ++i)
            if (lg.labels[i].v == emb.apex) pi[lg.labels[i].u] = static_cast<int>(i);
        bool ok = true;
        for (int v = 0; ok && v < n; ++v) ok = pi[v] >= 0;
        for (int u = 0; ok && u < n; ++u)
            for (int v = u + 1; ok && v < n; ++v)
                ok = lg.graph.adjacent(pi[u], pi[v]) == h.adjacent(u, v);
        if (!ok)
            mm.push_back(
                {to_graph6(h), "embedding", {{"restricted_gallai_isomorphic", false}}, ""});
        return true;
    });
}

void write_report_jsonl(const CrosscheckReport& r, std::ostream& out) {
    using nlohmann::ordered_json;
    for (const Mismatch& m : r.mismatches) {
        ordered_json line;
        line["graph6"] = m.graph6;
        line["question"] = m.question;
        ordered_json routes;
        for (const auto& [name, answer] : m.routes) routes[name] = answer;
        line["routes"] = std::move(routes);
        if (!m.detail.empty()) line["detail"] = m.detail;
        out << line.dump() << "\n";
    }
    ordered_json summary;
    summary["n_max"] = r.n_max;
    summary["graphs"] = r.graphs_checked;
    summary["mismatches"] = r.mismatches.size();
    summary["ms"] = r.elapsed_ms;
    out << summary.dump() << "\n";
}

}  // namespace gallai
