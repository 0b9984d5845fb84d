#pragma once

#include <string>
#include <vector>

#include "cgbench/question.hpp"

namespace cgbench {

// One JSON value per non-blank line. Throws IoError when the file cannot be
// read and ParseError (with file:line) on malformed JSON.
std::vector<Json> read_jsonl(const std::string& path);

Json read_json_file(const std::string& path);

// Writers go through a sibling temp file and rename, so readers never see a
// half-written file and a crashed run leaves the previous output intact.
void write_text_atomic(const std::string& path, const std::string& content);
void write_jsonl_atomic(const std::string& path, const std::vector<Json>& rows);
void write_json_atomic(const std::string& path, const Json& value);

}  // namespace cgbench
