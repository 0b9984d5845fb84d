#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cgbench/question.hpp"

namespace cgbench {

enum class Verdict { Correct, Incorrect, Ungradable };

const char* verdict_name(Verdict v);
Verdict verdict_from_name(const std::string& name);

struct GradeRecord {
    std::string question_id;
    std::string model;
    std::string style;
    std::string response_text;
    std::optional<std::string> extracted;  // normalized answer, absent when ungradable
    Verdict verdict = Verdict::Ungradable;
    Json ground_truth;

    Json to_json() const;
    static GradeRecord from_json(const Json& j);
};

// Checks a normalized answer against the instance, consulting the oracle
// verifiers for open-ended formats (any valid witness is accepted). Invalid
// or malformed answers come back false rather than throwing.
bool answer_correct(const QuestionInstance& inst, const std::string& answer);

GradeRecord grade(const QuestionInstance& inst, const std::string& model,
                  const std::string& style, const std::string& response_text);

// Rows of {question_id, model, verdict} replace the verdict on every
// matching record, for human adjudication of ungradable responses.
void apply_overrides(std::vector<GradeRecord>& records, const std::vector<Json>& overrides);

}  // namespace cgbench
