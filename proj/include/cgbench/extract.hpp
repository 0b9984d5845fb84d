#pragma once

#include <optional>
#include <string>

#include "cgbench/tasks.hpp"

namespace cgbench {

// Pulls the final answer out of free-form model text: the last "Answer:"
// marker wins (any casing, tolerant of spacing), otherwise the last
// non-empty line is tried. The result is normalized per question type
// ("yes"/"no", the bare integer, the option letter, or the trimmed answer
// body). Returns nullopt when nothing usable is found; never throws.
std::optional<std::string> extract_answer(const std::string& response, QType qtype);

}  // namespace cgbench
