#pragma once

#include <vector>

#include "cgbench/basic_ops.hpp"
#include "cgbench/graph.hpp"

namespace cgbench {

// Simple paths following edge orientation tail-to-head throughout.
// Ordered by length, then lexicographically by labels.
std::vector<NodePath> directed_paths(const MixedGraph& g, char x, char y);
int directed_path_count(const MixedGraph& g, char x, char y);
bool directed_path_exists(const MixedGraph& g, char x, char y);
// node-sequence check: seq runs x..y along directed edges, nodes distinct
bool verify_directed_path(const MixedGraph& g, char x, char y, const std::vector<char>& seq);

// Orientation-blind paths from x to y whose first step carries an arrowhead
// at x (a directed edge into x, or a bidirected edge). Subset of all_paths.
std::vector<NodePath> backdoor_paths(const MixedGraph& g, char x, char y);
int backdoor_path_count(const MixedGraph& g, char x, char y);
NodePath backdoor_shortest(const MixedGraph& g, char x, char y);  // throws NoBackdoorPath
NodePath backdoor_longest(const MixedGraph& g, char x, char y);   // throws NoBackdoorPath
// node-sequence check: some edge of the first hop points into x and the
// sequence is an orientation-blind path x..y
bool verify_backdoor_path(const MixedGraph& g, char x, char y, const std::vector<char>& seq);

}  // namespace cgbench
