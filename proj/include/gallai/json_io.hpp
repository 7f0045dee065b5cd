#pragma once

#include <string>

#include "json.hpp"

#include "gallai/recognition.hpp"

namespace gallai {

nlohmann::ordered_json certificate_to_json(const Certificate& c);

// {"input": g6, "question": ..., "route": ..., "answer": ..., "certificate": {...}}
// with stable key order; route is omitted when empty.
nlohmann::ordered_json verdict_to_json(const std::string& input_graph6,
                                       const std::string& question,
                                       const std::string& route, const Verdict& v);

}  // namespace gallai
