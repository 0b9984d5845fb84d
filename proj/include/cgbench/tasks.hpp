#pragma once

#include <string>
#include <vector>

namespace cgbench {

// Twenty question families, grouped in three difficulty tiers. Codes are the
// short names used in question ids and config files.
enum class Task {
    SN, SE, NR2, NR3, PT, CL, TO,            // basic
    BLP, DS, MEC, MB, DP, BKP,               // intermediate
    CC, CT, CF, MRS, BAS, FAS, CEI,          // advanced
};

enum class QType { FindAll, FindOne, HowMany, ChooseSet, YesNo, Exist };

enum class Level { Basic, Intermediate, Advanced };

inline constexpr int kTaskCount = 20;
inline constexpr int kQTypeCount = 6;

const char* task_code(Task t);  // "SN", "2NR", ...
Task task_from_code(const std::string& code);
const char* qtype_code(QType q);  // "FA", "FO", "HM", "CS", "YN", "EX"
QType qtype_from_code(const std::string& code);
const char* level_name(Level l);  // "basic", "intermediate", "advanced"
Level task_level(Task t);

// direct prerequisite in a skill chain, if the task has one
std::vector<Task> task_prerequisites(Task t);

// stock question counts; zero marks an unsupported combination
int default_count(Task t, QType q);
bool pair_allowed(Task t, QType q);

// how many phrasing variants a combination cycles through (path FO asks for
// some/shortest/longest, adjustment FO for valid/minimal/maximal, ...)
int variant_count(Task t, QType q);
std::string variant_name(Task t, QType q, int variant);

// concept explanation prependable to prompts; empty when none is defined
std::string task_definition(Task t);

}  // namespace cgbench
