#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cgbench/graph.hpp"

namespace cgbench {

// ---- elements (tasks SN, SE) ----

std::vector<char> list_nodes(const MixedGraph& g);  // stored order
std::vector<std::string> list_edges(const MixedGraph& g);
int count_nodes(const MixedGraph& g);
int count_edges(const MixedGraph& g);
bool has_node_query(const MixedGraph& g, char v);
// parses "A->B", "A<->B" or "A-B"; unknown labels or malformed text -> false
bool has_edge_query(const MixedGraph& g, const std::string& edge);

// ---- kinship (task 2NR) ----

enum class Relation { Parents, Children, Ancestors, Descendants };

const char* relation_name(Relation r);  // "parents", ...
std::vector<char> relatives(const MixedGraph& g, char v, Relation rel);

// ---- triples (task 3NR) ----

enum class TripleKind { Chain, Fork, VStructure };

const char* triple_kind_name(TripleKind k);       // "chain", ...
const char* triple_kind_plural(TripleKind k);     // "chains", ...

struct Triple {
    char a, m, b;  // m is the middle node
    bool operator==(const Triple& o) const { return a == o.a && m == o.m && b == o.b; }
};

// Chains are canonicalized in arrow direction a->m->b; forks and
// v-structures sort the outer pair alphabetically.
std::vector<Triple> enumerate_triples(const MixedGraph& g, TripleKind k);
// nullopt when (a,m,b) is not a both-sides-directed triple of any kind
// (this includes shielded colliders, which fail the v-structure test)
std::optional<TripleKind> classify_triple(const MixedGraph& g, char a, char m, char b);

// ---- paths (task PT) ----

enum class Step { Forward, Backward, Bidirected, Undirected };

struct NodePath {
    std::vector<char> nodes;  // >= 2 distinct labels
    std::vector<Step> steps;  // steps[i] connects nodes[i] to nodes[i+1]
    std::string text() const;  // "A -> B <- C", "A <-> B", "A - B"
    bool operator==(const NodePath& o) const { return nodes == o.nodes && steps == o.steps; }
};

// Orientation-blind simple paths. Parallel directed/bidirected edges on the
// same node pair yield distinct paths. Ordered by length, then by label
// sequence, then by step ranks (so parallel-edge variants order stably).
std::vector<NodePath> all_paths(const MixedGraph& g, char x, char y);
int count_paths(const MixedGraph& g, char x, char y);
NodePath one_path(const MixedGraph& g, char x, char y);       // throws NoPathExists
NodePath shortest_path(const MixedGraph& g, char x, char y);  // throws NoPathExists
NodePath longest_path(const MixedGraph& g, char x, char y);   // throws NoPathExists
// checks NodePath invariants against g (adjacency per step, distinct nodes)
bool verify_path(const MixedGraph& g, const NodePath& p);

// ---- cycles (task CL) ----

bool cycle_exists(const MixedGraph& g);
// smallest directed cycle, rendered closed (first node repeated at the end);
// throws NoCycleExists on acyclic input
std::vector<char> find_cycle(const MixedGraph& g);
// accepts open ([A,B,C]) and closed ([A,B,C,A]) forms
bool verify_cycle(const MixedGraph& g, const std::vector<char>& seq);

// ---- topological order (task TO) ----

std::vector<char> topological_order(const MixedGraph& g);  // throws CyclicGraph
bool verify_topological(const MixedGraph& g, const std::vector<char>& seq);

}  // namespace cgbench
