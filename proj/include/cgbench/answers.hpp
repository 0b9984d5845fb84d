#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cgbench/basic_ops.hpp"
#include "cgbench/graph.hpp"

namespace cgbench {

// Canonical answer renderings, shared by the generator (ground truth), the
// builtin endpoints (perfect answers) and the prompt text.
std::string list_text(const std::vector<char>& nodes);  // "A, B, C"; "none" when empty
std::string set_text(const std::vector<char>& nodes);   // "{A, B}"; "{}" when empty
std::string triple_text(const Triple& t);               // "(A, B, C)"
std::string joined_items(const std::vector<std::string>& parts);  // "x; y"; "none" when empty
std::string partition_text(const std::vector<std::vector<char>>& blocks);

// instruction appended to every prompt, keyed by the truth kind
std::string format_note(const std::string& truth_kind);

// Lenient model-answer parsing. Malformed input yields nullopt (graded as
// wrong), not an exception.
std::optional<std::vector<char>> parse_node_list(const std::string& s);  // handles "none", braces
std::optional<std::vector<char>> parse_node_seq(const std::string& s);   // letters in written order
std::vector<std::string> split_items(const std::string& s);              // on ';', trimmed, non-empty
std::optional<Triple> parse_triple(const std::string& s);                // "(A, B, C)"
std::string normalize_edge(const std::string& s);  // "B <-> A" -> "A<->B"; "" if malformed
std::optional<long> parse_integer(const std::string& s);
std::string trim_copy(const std::string& s);

}  // namespace cgbench
