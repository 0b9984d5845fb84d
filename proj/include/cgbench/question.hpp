#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "cgbench/graph.hpp"
#include "cgbench/tasks.hpp"

namespace cgbench {

using Json = nlohmann::ordered_json;

// graph <-> {"kind": ..., "nodes": [...], "directed": [...], ...}
Json graph_to_json(const MixedGraph& g);
MixedGraph graph_from_json(const Json& j);

struct Choice {
    std::string label;  // "A".."D"
    std::string text;
};

// One benchmark item as serialized to questions.jsonl. The graph is kept in
// its JSON form; graph() rebuilds the structure on demand.
struct QuestionInstance {
    std::string id;  // "<task>-<qtype>-<seq>", e.g. "BKP-FO-17"
    Task task = Task::SN;
    QType qtype = QType::FindAll;
    std::string polarity;  // "is" / "is-not" where the template flips, else ""
    Json graph_json;
    std::string prompt_core;      // instantiated template, option lines included
    std::vector<Choice> choices;  // ChoiceSelection only
    Json ground_truth;            // {"kind": ..., "value": ..., query params}
    std::uint64_t seed = 0;

    MixedGraph graph() const { return graph_from_json(graph_json); }

    Json to_json() const;
    static QuestionInstance from_json(const Json& j);
};

}  // namespace cgbench
