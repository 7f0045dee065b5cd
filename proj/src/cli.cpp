#include "gallai/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "gallai/graph.hpp"
#include "gallai/harness.hpp"
#include "gallai/json_io.hpp"
#include "gallai/operators.hpp"
#include "gallai/recognition.hpp"

namespace gallai {

namespace {

using nlohmann::ordered_json;

std::string trimmed(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

// (graph6 echo, graph) per input graph: one per line for graph6, the whole
// stream for edge-list input.
std::vector<std::pair<std::string, Graph>> read_graphs(std::istream& stream,
                                                       const std::string& format) {
    std::vector<std::pair<std::string, Graph>> out;
    if (format == "edgelist") {
        std::string text((std::istreambuf_iterator<char>(stream)),
                         std::istreambuf_iterator<char>());
        Graph g = parse_edge_list(text);
        std::string g6 = to_graph6(g);
        out.emplace_back(std::move(g6), std::move(g));
        return out;
    }
    std::string line;
    size_t lineno = 0;
    while (std::getline(stream, line)) {
        ++lineno;
        std::string t = trimmed(line);
        if (t.empty()) continue;
        try {
            Graph g = parse_graph6(t);
            out.emplace_back(std::move(t), std::move(g));
        } catch (const parse_error& e) {
            throw parse_error("input line " + std::to_string(lineno) + ": " + e.what(),
                              e.offset);
        }
    }
    return out;
}

std::vector<std::pair<std::string, Graph>> load_input(const std::string& path,
                                                      const std::string& format,
                                                      std::istream& stdin_stream) {
    if (path == "-") return read_graphs(stdin_stream, format);
    std::ifstream file(path);
    if (!file) throw std::runtime_error("cannot open input file: " + path);
    return read_graphs(file, format);
}

ordered_json labels_json(const std::vector<Edge>& labels) {
    ordered_json arr = ordered_json::array();
    for (const Edge& e : labels) arr.push_back(ordered_json::array({e.u, e.v}));
    return arr;
}

int cmd_transform(const std::string& kind, const std::string& input,
                  const std::string& informat, const std::string& outformat,
                  std::istream& in, std::ostream& out) {
    auto op = kind == "gallai"        ? gallai_graph
              : kind == "anti-gallai" ? anti_gallai_graph
                                      : line_graph;
    for (const auto& [g6, g] : load_input(input, informat, in)) {
        (void)g6;
        LabeledGraph lg = op(g);
        if (outformat == "dot") {
            out << to_dot(lg);
        } else if (outformat == "json") {
            ordered_json j;
            j["graph6"] = to_graph6(lg.graph);
            j["labels"] = labels_json(lg.labels);
            out << j.dump() << "\n";
        } else {
            out << to_graph6(lg.graph) << "\n";
        }
    }
    return 0;
}

int cmd_recognize(const std::string& question, const std::string& route,
                  const std::string& input, const std::string& informat, std::istream& in,
                  std::ostream& out) {
    std::vector<std::string> routes;
    if (route == "all") {
        routes = {"direct", "characterization"};
        if (question == "tree") routes.push_back("structural");
    } else {
        if (question == "forest" && route == "structural")
            throw std::invalid_argument("route structural applies to tree recognition only");
        routes = {route};
    }
    bool all_true = true;
    for (const auto& [g6, g] : load_input(input, informat, in)) {
        for (const std::string& r : routes) {
            Verdict v;
            if (question == "forest")
                v = r == "direct" ? is_gallai_forest_direct(g) : is_gallai_forest(g);
            else
                v = is_gallai_tree(g, r == "direct" ? TreeRoute::direct
                                   : r == "structural" ? TreeRoute::structural
                                                       : TreeRoute::characterization);
            all_true = all_true && v.answer;
            out << verdict_to_json(g6, question, r, v).dump() << "\n";
        }
    }
    return all_true ? 0 : 1;
}

int cmd_embed(const std::string& input, const std::string& informat,
              const std::string& outformat, std::istream& in, std::ostream& out) {
    for (const auto& [g6, h] : load_input(input, informat, in)) {
        (void)g6;
        ApexEmbedding emb = apex_embedding(h);
        if (outformat == "graph6") {
            out << to_graph6(emb.graph) << "\n";  // apex is the last vertex
        } else {
            ordered_json j;
            j["graph6"] = to_graph6(emb.graph);
            j["apex"] = emb.apex;
            out << j.dump() << "\n";
        }
    }
    return 0;
}

int cmd_crosscheck(const std::string& kind, int n_max, bool dedup, int threads,
                   std::ostream& out) {
    SweepOptions opt{dedup, threads};
    CrosscheckReport rep;
    if (kind == "thm1") rep = crosscheck_thm1(n_max, opt);
    else if (kind == "thm2") rep = crosscheck_thm2(n_max, opt);
    else if (kind == "prop1") rep = crosscheck_prop1(n_max, opt);
    else if (kind == "heredity") rep = crosscheck_heredity(n_max, opt);
    else rep = crosscheck_embedding(n_max, opt);
    write_report_jsonl(rep, out);
    return rep.mismatches.empty() ? 0 : 1;
}

int cmd_patterns(std::ostream& out) {
    for (const Pattern* p : patterns().all()) {
        ordered_json j;
        j["name"] = p->name;
        j["graph6"] = to_graph6(p->graph);
        j["edges"] = labels_json(p->graph.edges());
        out << j.dump() << "\n";
    }
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"Gallai, anti-Gallai and line graph constructions, forest/tree "
                 "recognition with certificates, and exhaustive cross-checks"};
    app.require_subcommand(1);

    std::string input = "-";
    std::string informat = "graph6";
    std::string outformat;
    std::string kind;
    std::string route = "characterization";
    int n_max = 0;
    bool dedup = false;
    int threads = 0;

    auto* transform = app.add_subcommand("transform", "construct a derived graph per input graph");
    transform->add_option("kind", kind, "gallai | anti-gallai | line")
        ->required()
        ->check(CLI::IsMember({"gallai", "anti-gallai", "line"}));
    transform->add_option("input", input, "input file, or - for stdin");
    transform->add_option("--input-format", informat)->check(CLI::IsMember({"graph6", "edgelist"}));
    transform->add_option("--output-format", outformat)->check(CLI::IsMember({"graph6", "dot", "json"}));

    auto* recognize = app.add_subcommand("recognize", "decide whether the Gallai graph is a forest or tree");
    recognize->add_option("question", kind, "forest | tree")
        ->required()
        ->check(CLI::IsMember({"forest", "tree"}));
    recognize->add_option("input", input, "input file, or - for stdin");
    recognize->add_option("--route", route, "direct | characterization | structural | all")
        ->check(CLI::IsMember({"direct", "characterization", "structural", "all"}));
    recognize->add_option("--input-format", informat)->check(CLI::IsMember({"graph6", "edgelist"}));

    auto* embed = app.add_subcommand("embed", "realize each input graph inside a Gallai graph");
    embed->add_option("input", input, "input file, or - for stdin");
    embed->add_option("--input-format", informat)->check(CLI::IsMember({"graph6", "edgelist"}));
    embed->add_option("--output-format", outformat)->check(CLI::IsMember({"graph6", "json"}));

    auto* crosscheck = app.add_subcommand("crosscheck", "exhaustive small-graph cross-checks");
    crosscheck->add_option("kind", kind, "thm1 | thm2 | prop1 | heredity | embedding")
        ->required()
        ->check(CLI::IsMember({"thm1", "thm2", "prop1", "heredity", "embedding"}));
    crosscheck->add_option("--n-max", n_max, "sweep graphs on 1..n-max vertices")->required();
    crosscheck->add_flag("--dedup", dedup, "sweep isomorphism classes instead of labeled graphs");
    crosscheck->add_option("--threads", threads, "worker count, 0 = hardware concurrency");

    auto* pats = app.add_subcommand("patterns", "dump the F1..F9, F8minus and gem catalog");

    std::vector<const char*> argv;
    argv.push_back("gallai");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "gallai: " << e.what() << "\n";
        return 2;
    }

    try {
        if (transform->parsed())
            return cmd_transform(kind, input, informat,
                                 outformat.empty() ? "graph6" : outformat, in, out);
        if (recognize->parsed()) return cmd_recognize(kind, route, input, informat, in, out);
        if (embed->parsed())
            return cmd_embed(input, informat, outformat.empty() ? "json" : outformat, in, out);
        if (crosscheck->parsed()) return cmd_crosscheck(kind, n_max, dedup, threads, out);
        if (pats->parsed()) return cmd_patterns(out);
    } catch (const std::exception& e) {
        err << "gallai: " << e.what() << "\n";
        return 2;
    }
    err << "gallai: no subcommand\n";
    return 2;
}

}  // namespace gallai
