#include "cgbench/prompt.hpp"

#include <algorithm>

#include "cgbench/answers.hpp"
#include "cgbench/errors.hpp"
#include "cgbench/rng.hpp"
#include "cgbench/tasks.hpp"

namespace cgbench {

const char* style_name(Style s) {
    switch (s) {
        case Style::Basic: return "basic";
        case Style::DefinitionGuided: return "def";
        case Style::Icl1: return "icl1";
        case Style::Icl3: return "icl3";
    }
    fail(Err::ConfigInvalid, "bad style value");
}

Style style_from_name(const std::string& name) {
    if (name == "basic") return Style::Basic;
    if (name == "def") return Style::DefinitionGuided;
    if (name == "icl1") return Style::Icl1;
    if (name == "icl3") return Style::Icl3;
    fail(Err::ConfigInvalid, "unknown style '" + name + "'");
}

int style_shots(Style s) {
    if (s == Style::Icl1) return 1;
    if (s == Style::Icl3) return 3;
    return 0;
}

namespace {

std::vector<char> chars_of(const Json& arr) {
    std::vector<char> out;
    for (const auto& v : arr) out.push_back(v.get<std::string>()[0]);
    return out;
}

}  // namespace

std::string ground_truth_answer_text(const QuestionInstance& inst) {
    const Json& t = inst.ground_truth;
    std::string kind = t.at("kind").get<std::string>();
    if (kind == "yesno") return t.at("value").get<bool>() ? "Yes" : "No";
    if (kind == "number") return std::to_string(t.at("value").get<long>());
    if (kind == "option") return t.at("value").get<std::string>();
    if (kind == "nodeset" || kind == "ordering") return list_text(chars_of(t.at("value")));
    if (kind == "edgeset") {
        std::vector<std::string> parts;
        for (const auto& e : t.at("value")) parts.push_back(e.get<std::string>());
        if (parts.empty()) return "none";
        std::string out;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i) out += ", ";
            out += parts[i];
        }
        return out;
    }
    if (kind == "pathset") {
        std::vector<std::string> parts;
        for (const auto& p : t.at("value")) parts.push_back(p.get<std::string>());
        return joined_items(parts);
    }
    if (kind == "tripleset") {
        std::vector<std::string> parts;
        for (const auto& tr : t.at("value")) {
            auto v = chars_of(tr);
            parts.push_back(triple_text({v[0], v[1], v[2]}));
        }
        return joined_items(parts);
    }
    if (kind == "path" || kind == "cycle" || kind == "graph")
        return t.at("value").get<std::string>();
    if (kind == "partition") {
        std::vector<std::vector<char>> blocks;
        for (const auto& b : t.at("value")) blocks.push_back(chars_of(b));
        return partition_text(blocks);
    }
    fail(Err::ConfigInvalid, "no answer rendering for truth kind '" + kind + "'");
}

std::string definition_for(Task t, const Json& definitions) {
    std::string code = task_code(t);
    if (definitions.is_object() && definitions.contains(code)) {
        const Json& d = definitions.at(code);
        if (!d.is_string()) fail(Err::ConfigInvalid, "definitions." + code + " must be a string");
        return d.get<std::string>();
    }
    return task_definition(t);
}

namespace {

std::string question_block(const QuestionInstance& inst) {
    return "Graph: " + inst.graph().text_form() + "\nQuestion: " + inst.prompt_core + "\n";
}

std::string format_line(const QuestionInstance& inst) {
    return format_note(inst.ground_truth.at("kind").get<std::string>());
}

std::vector<const QuestionInstance*> pick_shots(const QuestionInstance& inst, int k,
                                                const std::vector<QuestionInstance>& source) {
    std::vector<const QuestionInstance*> pool;
    for (const QuestionInstance& cand : source) {
        if (cand.task != inst.task || cand.qtype != inst.qtype) continue;
        if (cand.id == inst.id || cand.graph_json == inst.graph_json) continue;
        pool.push_back(&cand);
    }
    if (static_cast<int>(pool.size()) < k)
        fail(Err::InsufficientShots, "need " + std::to_string(k) + " " + task_code(inst.task) +
                                         "/" + qtype_code(inst.qtype) +
                                         " exemplars with distinct graphs, have " +
                                         std::to_string(pool.size()));
    // stable order first, then a seed-determined draw so different questions
    // in the same cell do not all show the same exemplars
    std::sort(pool.begin(), pool.end(),
              [](const QuestionInstance* a, const QuestionInstance* b) { return a->id < b->id; });
    Rng rng(mix_seed(inst.seed, 0x1c1));
    rng.shuffle(pool);
    pool.resize(static_cast<std::size_t>(k));
    return pool;
}

}  // namespace

std::string render_prompt(const QuestionInstance& inst, Style style,
                          const std::vector<QuestionInstance>& shot_source,
                          const Json& definitions) {
    std::string out;
    if (style == Style::DefinitionGuided) {
        std::string def = definition_for(inst.task, definitions);
        if (def.empty())
            fail(Err::MissingDefinition, "no definition available for task " +
                                             std::string(task_code(inst.task)));
        out += "You are given the definition of a concept, a causal graph, and a question about "
               "it. Use the definition to answer the question.\n";
        out += "Definition: " + def + "\n\n";
    }
    int k = style_shots(style);
    if (k > 0) {
        out += "Here are " + std::to_string(k) + " solved example" + (k == 1 ? "" : "s") +
               ". Answer the final question in the same format.\n\n";
        auto shots = pick_shots(inst, k, shot_source);
        for (int i = 0; i < k; ++i) {
            out += "Example " + std::to_string(i + 1) + ":\n";
            out += question_block(*shots[static_cast<std::size_t>(i)]);
            out += "Answer: " + ground_truth_answer_text(*shots[static_cast<std::size_t>(i)]) +
                   "\n\n";
        }
        out += "Now the question:\n";
    }
    out += question_block(inst);
    out += format_line(inst);
    return out;
}

}  // namespace cgbench
