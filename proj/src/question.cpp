#include "cgbench/question.hpp"

#include "cgbench/errors.hpp"

namespace cgbench {

Json graph_to_json(const MixedGraph& g) {
    Json j;
    j["kind"] = kind_name(g.kind());
    j["nodes"] = Json::array();
    for (char c : g.labels()) j["nodes"].push_back(std::string(1, c));
    auto edges = [&](const std::vector<std::pair<int, int>>& list, EdgeCat cat) {
        Json arr = Json::array();
        for (auto [u, v] : list) arr.push_back(edge_text(g.label(u), g.label(v), cat));
        return arr;
    };
    j["directed"] = edges(g.directed(), EdgeCat::Directed);
    j["bidirected"] = edges(g.bidirected(), EdgeCat::Bidirected);
    j["undirected"] = edges(g.undirected(), EdgeCat::Undirected);
    return j;
}

namespace {

std::pair<char, char> parse_edge_item(const std::string& s, const char* arrow) {
    std::string t;
    for (char c : s)
        if (c != ' ') t.push_back(c);
    std::string a(arrow);
    auto pos = t.find(a);
    if (pos != 1 || t.size() != 2 + a.size())
        fail(Err::ParseError, "bad edge item '" + s + "'");
    return {t.front(), t.back()};
}

}  // namespace

MixedGraph graph_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("kind") || !j.contains("nodes"))
        fail(Err::ParseError, "graph object needs kind and nodes");
    GraphKind kind = kind_from_name(j.at("kind").get<std::string>());
    std::vector<char> nodes;
    for (const auto& item : j.at("nodes")) {
        std::string s = item.get<std::string>();
        if (s.size() != 1) fail(Err::ParseError, "node label '" + s + "' not a single letter");
        nodes.push_back(s[0]);
    }
    auto edges = [&](const char* key, const char* arrow) {
        std::vector<MixedGraph::LabelPair> out;
        if (j.contains(key))
            for (const auto& item : j.at(key))
                out.push_back(parse_edge_item(item.get<std::string>(), arrow));
        return out;
    };
    return MixedGraph::build(kind, nodes, edges("directed", "->"), edges("bidirected", "<->"),
                             edges("undirected", "-"));
}

Json QuestionInstance::to_json() const {
    Json j;
    j["id"] = id;
    j["task"] = task_code(task);
    j["level"] = level_name(task_level(task));
    j["qtype"] = qtype_code(qtype);
    if (polarity.empty())
        j["polarity"] = nullptr;
    else
        j["polarity"] = polarity;
    j["graph"] = graph_json;
    j["prompt_core"] = prompt_core;
    if (!choices.empty()) {
        Json arr = Json::array();
        for (const auto& c : choices) arr.push_back({{"label", c.label}, {"text", c.text}});
        j["choices"] = arr;
    }
    j["ground_truth"] = ground_truth;
    j["seed"] = seed;
    j["n_v"] = graph_json.at("nodes").size();
    j["n_e"] = graph_json.at("directed").size() + graph_json.at("bidirected").size() +
               graph_json.at("undirected").size();
    return j;
}

QuestionInstance QuestionInstance::from_json(const Json& j) {
    QuestionInstance q;
    try {
        q.id = j.at("id").get<std::string>();
        q.task = task_from_code(j.at("task").get<std::string>());
        q.qtype = qtype_from_code(j.at("qtype").get<std::string>());
        if (j.contains("polarity") && !j.at("polarity").is_null())
            q.polarity = j.at("polarity").get<std::string>();
        q.graph_json = j.at("graph");
        q.prompt_core = j.at("prompt_core").get<std::string>();
        if (j.contains("choices"))
            for (const auto& c : j.at("choices"))
                q.choices.push_back({c.at("label").get<std::string>(), c.at("text").get<std::string>()});
        q.ground_truth = j.at("ground_truth");
        q.seed = j.at("seed").get<std::uint64_t>();
    } catch (const Json::exception& e) {
        fail(Err::ParseError, std::string("bad question record: ") + e.what());
    }
    return q;
}

}  // namespace cgbench
