#pragma once

#include <optional>
#include <vector>

#include "cgbench/basic_ops.hpp"
#include "cgbench/graph.hpp"

namespace cgbench {

enum class BlockRule { NonColliderInZ, ColliderClosed };

struct BlockingVerdict {
    bool blocked = false;
    char witness = 0;  // interior node satisfying the rule, when blocked
    BlockRule rule = BlockRule::NonColliderInZ;
};

// Path blocking per the two classic rules. A node with arrowheads from both
// neighboring steps is a collider (bidirected ends count as arrowheads);
// rule (2) reads "no descendant of m is in Z" as m itself included.
// Throws InvalidPath for sequences that are not paths of g, EndpointInZ if
// an endpoint of p is conditioned on.
BlockingVerdict is_path_blocked(const MixedGraph& g, const NodePath& p, const std::vector<char>& z);

// find_valid: all non-collider interior nodes (empty when the path is pure
// colliders, which Z=∅ already blocks). find_minimal: smallest cardinality,
// lexicographic tie-break. Single-edge paths throw Unblockable.
std::vector<char> blocking_set_valid(const MixedGraph& g, const NodePath& p);
std::vector<char> blocking_set_minimal(const MixedGraph& g, const NodePath& p);

// Reachability formulation (head-tracked walk states); equivalent to
// checking every path, without enumerating them.
bool d_separated(const MixedGraph& g, char x, char y, const std::vector<char>& z);

// nullopt when no separating set exists (e.g. adjacent x, y)
std::optional<std::vector<char>> d_separator_valid(const MixedGraph& g, char x, char y);
std::optional<std::vector<char>> d_separator_minimal(const MixedGraph& g, char x, char y);

}  // namespace cgbench
