#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "gallai/graph.hpp"

namespace gallai {

// One disagreement between routes that are supposed to agree.
struct Mismatch {
    std::string graph6;
    std::string question;
    std::vector<std::pair<std::string, bool>> routes;
    std::string detail;  // e.g. the offending vertex subset; may be empty
};

struct CrosscheckReport {
    int n_max = 0;
    std::uint64_t graphs_checked = 0;
    std::vector<Mismatch> mismatches;
    std::int64_t elapsed_ms = 0;
};

// ---------------- enumeration ----------------

// Adjacency bit-vectors use the graph6 bit layout (upper triangle, column
// major) read as a big-endian integer, so enumeration order, graph6 order
// and canonical forms all agree.
std::uint64_t labeled_graph_count(int n);  // 2^C(n,2); requires C(n,2) <= 63
Graph graph_from_bitvector(int n, std::uint64_t bits);
std::uint64_t bitvector_of(const Graph& g);

// One minimum-bit-vector representative per isomorphism class, ascending.
// Orderly generation: canonical strings are exactly the canonical extensions
// of canonical prefixes. Capped at n <= 9.
std::vector<std::uint64_t> enumerate_canonical_bitvectors(int n);

// Labeled mode: every adjacency bit-vector once, ascending (n <= 8).
// Dedup mode: canonical representatives, ascending (n <= 9).
void enumerate_graphs(int n, bool dedup, const std::function<void(const Graph&)>& fn);

// ---------------- cross-checks ----------------

struct SweepOptions {
    bool dedup = false;  // sweep isomorphism classes instead of labeled graphs
    int threads = 0;     // 0 = hardware concurrency
};

// Gamma(G) forest <=> chordal and F1..F9-free, over all graphs with
// 1 <= n <= n_max (labeled <= 7, dedup <= 8).
CrosscheckReport crosscheck_thm1(int n_max, SweepOptions opt = {});

// The three tree routes agree pairwise over graphs without isolated vertices.
CrosscheckReport crosscheck_thm2(int n_max, SweepOptions opt = {});

// Gamma(G) connected <=> no non-trivial homogeneous set spans an edge.
CrosscheckReport crosscheck_prop1(int n_max, SweepOptions opt = {});

// Gamma(g[S]) equals the subgraph of Gamma(g) induced by labels inside S,
// under the label map, for every vertex subset S (n_max <= 6).
CrosscheckReport crosscheck_heredity(int n_max, SweepOptions opt = {});

// The apex construction realizes every h on <= n_max <= 5 vertices inside a
// Gallai graph; swept over isomorphism classes.
CrosscheckReport crosscheck_embedding(int n_max, SweepOptions opt = {});

// JSON-lines: one line per mismatch, then a summary line
// {"n_max":..,"graphs":..,"mismatches":..,"ms":..}.
void write_report_jsonl(const CrosscheckReport& r, std::ostream& out);

}  // namespace gallai
