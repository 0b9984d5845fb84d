#pragma once

#include <vector>

#include "cgbench/graph.hpp"

namespace cgbench {

// Connected components of the bidirected part; bidirected-isolated nodes
// form singleton blocks. Blocks and their members are alphabetical.
// ADMG input required.
std::vector<std::vector<char>> c_component_partition(const MixedGraph& g);
int c_component_count(const MixedGraph& g);
bool is_c_component(const MixedGraph& g);

// C-forest: the graph is one C-component and no node has more than one
// child. C-tree: additionally the root set is a singleton.
bool is_c_forest(const MixedGraph& g);
bool is_c_tree(const MixedGraph& g);

// nodes without outgoing directed edges (hence without descendants)
std::vector<char> maximal_root_set(const MixedGraph& g);
int maximal_root_set_count(const MixedGraph& g);
bool verify_maximal_root_set(const MixedGraph& g, const std::vector<char>& s);

// c-components of the sub-ADMG induced by `within`, as masks (internal to
// the identification algorithm but shared with the self-test oracles)
std::vector<Mask> c_component_masks(const MixedGraph& g, Mask within);

}  // namespace cgbench
