#pragma once

#include <string>
#include <vector>

#include "cgbench/question.hpp"

namespace cgbench {

enum class Style {
    Basic,             // graph, question, answer-format instruction
    DefinitionGuided,  // prepends the concept definition for the task
    Icl1,              // prepends 1 solved exemplar of the same task/qtype
    Icl3,              // prepends 3 solved exemplars
};

inline constexpr int kStyleCount = 4;

const char* style_name(Style s);  // "basic", "def", "icl1", "icl3"
Style style_from_name(const std::string& name);
int style_shots(Style s);

// The answer a perfect solver would give, rendered in the format the prompt
// asks for. Also used verbatim by the oracle mock and for in-context shots.
std::string ground_truth_answer_text(const QuestionInstance& inst);

// Definition text for a task: the "definitions" object (task code -> text)
// wins over the built-in wording; empty string when neither has one.
std::string definition_for(Task t, const Json& definitions);

// Renders the full prompt for one instance. IcL shots come from shot_source,
// restricted to the same task and question type with a different graph;
// throws InsufficientShots when not enough qualify and MissingDefinition
// when the definition-guided style has no definition to show.
std::string render_prompt(const QuestionInstance& inst, Style style,
                          const std::vector<QuestionInstance>& shot_source = {},
                          const Json& definitions = Json::object());

}  // namespace cgbench
