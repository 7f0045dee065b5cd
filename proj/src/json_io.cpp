#include "gallai/json_io.hpp"

namespace gallai {

using nlohmann::ordered_json;

namespace {

ordered_json edge_json(const Edge& e) { return ordered_json::array({e.u, e.v}); }

}  // namespace

ordered_json certificate_to_json(const Certificate& c) {
    ordered_json out;
    out["kind"] = certificate_kind(c);
    ordered_json data = ordered_json::object();
    std::visit(
        [&](const auto& cert) {
            using T = std::decay_t<decltype(cert)>;
            if constexpr (std::is_same_v<T, ChordlessCycle>) {
                data["vertices"] = cert.vertices;
            } else if constexpr (std::is_same_v<T, PatternEmbedding>) {
                data["pattern"] = cert.pattern;
                data["map"] = cert.map;
            } else if constexpr (std::is_same_v<T, NonIndependentHomogeneousSet>) {
                data["set"] = cert.set;
                data["edge"] = edge_json(cert.witness);
            } else if constexpr (std::is_same_v<T, GallaiCycle>) {
                ordered_json labels = ordered_json::array();
                for (const Edge& e : cert.labels) labels.push_back(edge_json(e));
                data["labels"] = std::move(labels);
            } else if constexpr (std::is_same_v<T, GallaiDisconnection>) {
                data["labels"] = ordered_json::array({edge_json(cert.a), edge_json(cert.b)});
            } else if constexpr (std::is_same_v<T, BlockViolation>) {
                data["vertices"] = cert.vertices;
                data["condition"] = cert.condition;
            }
        },
        c);
    out["data"] = std::move(data);
    return out;
}

ordered_json verdict_to_json(const std::string& input_graph6, const std::string& question,
                             const std::string& route, const Verdict& v) {
    ordered_json out;
    out["input"] = input_graph6;
    out["question"] = question;
    if (!route.empty()) out["route"] = route;
    out["answer"] = v.answer;
    out["certificate"] = certificate_to_json(v.certificate);
    return out;
}

}  // namespace gallai
