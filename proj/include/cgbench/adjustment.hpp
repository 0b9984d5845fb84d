#pragma once

#include <optional>
#include <vector>

#include "cgbench/graph.hpp"

namespace cgbench {

enum class Criterion { Backdoor, Frontdoor };

struct AdjustmentQuery {
    char x, y;
    std::vector<char> z;
    Criterion criterion;
};

// Backdoor: Z blocks every backdoor path from x to y and contains no
// descendant of x. Frontdoor: Z intercepts every directed path from x to y,
// no backdoor path from x to any member of Z is unblocked (by ∅), and every
// backdoor path from a member of Z to y is blocked by {x}.
// Sets containing x or y are reported invalid rather than rejected.
bool adjustment_verify(const MixedGraph& g, const AdjustmentQuery& q);

bool adjustment_exists(const MixedGraph& g, char x, char y, Criterion c);

// find_valid: first valid set in subset-enumeration order. find_minimal /
// find_maximal: inclusion-minimal/-maximal, canonicalized by cardinality
// then lexicographic order. nullopt when no valid set exists.
std::optional<std::vector<char>> adjustment_find_valid(const MixedGraph& g, char x, char y, Criterion c);
std::optional<std::vector<char>> adjustment_find_minimal(const MixedGraph& g, char x, char y, Criterion c);
std::optional<std::vector<char>> adjustment_find_maximal(const MixedGraph& g, char x, char y, Criterion c);

// grading helpers: is the set inclusion-minimal/-maximal among valid sets
bool adjustment_is_minimal(const MixedGraph& g, char x, char y, Criterion c, const std::vector<char>& z);
bool adjustment_is_maximal(const MixedGraph& g, char x, char y, Criterion c, const std::vector<char>& z);

}  // namespace cgbench
