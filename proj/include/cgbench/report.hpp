#pragma once

#include <map>
#include <string>
#include <vector>

#include "cgbench/grading.hpp"
#include "cgbench/question.hpp"
#include "cgbench/tasks.hpp"

namespace cgbench {

struct AccCell {
    int correct = 0;
    int incorrect = 0;
    int ungradable = 0;

    int graded() const { return correct + incorrect; }
    double accuracy() const { return graded() ? double(correct) / graded() : 0.0; }
    void add(Verdict v);
};

struct StyleTables {
    std::map<std::string, AccCell> by_task;
    std::map<std::string, AccCell> by_qtype;
    std::map<std::string, AccCell> by_level;
    std::map<std::string, std::map<std::string, AccCell>> by_task_qtype;
};

// model name -> style name -> tables
using Tables = std::map<std::string, std::map<std::string, StyleTables>>;

// Rolls grade records up into accuracy tables, one per model and style.
// Throws UnknownQuestionId when a grade references no known question.
Tables aggregate(const std::vector<QuestionInstance>& questions,
                 const std::vector<GradeRecord>& grades);

// Expected accuracy of blind guessing: 1/2 for yes-no and existence, 1/4
// for four-option multiple choice, 0 for open-ended formats.
double random_baseline(Task t, QType q);

// True when the sequence never increases (tiny float slack tolerated).
bool chain_monotone(const std::vector<double>& accs);

// The three difficulty chains checked for monotone accuracy, yes-no cells.
std::vector<std::vector<Task>> default_chains();

// Compiles the criteria report: per-task accuracy vs the guessing baseline,
// per-qtype spread, style deltas on the definition-bearing tasks (when
// want_b3; throws MissingStyleRun if the needed runs are absent), and chain
// monotonicity verdicts.
Json criteria_report(const Tables& tables, const std::vector<std::vector<Task>>& chains,
                     bool want_b3);

// Plain-text task-by-model accuracy tables for terminal reading.
std::string report_text(const Tables& tables);

}  // namespace cgbench
