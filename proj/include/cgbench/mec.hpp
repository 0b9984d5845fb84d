#pragma once

#include <optional>
#include <vector>

#include "cgbench/graph.hpp"

namespace cgbench {

// Verma-Pearl test: two DAGs over the same node set are Markov equivalent
// iff they share skeleton and v-structures. Throws NodeSetMismatch when the
// label sets differ, WrongGraphKind for non-DAG inputs.
bool markov_equivalent(const MixedGraph& a, const MixedGraph& b);

// A different DAG in the equivalence class of g (canonical smallest edge
// list), or nullopt when the class is a singleton.
std::optional<MixedGraph> mec_other_member(const MixedGraph& g);

// parents ∪ children ∪ children's other parents
std::vector<char> markov_blanket(const MixedGraph& g, char v);

}  // namespace cgbench
