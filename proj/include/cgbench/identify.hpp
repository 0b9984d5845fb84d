#pragma once

#include "cgbench/graph.hpp"

namespace cgbench {

// Whether P(y | do(x)) is computable from the observational distribution of
// g. Runs the c-component identification recursion; on graphs without
// bidirected edges this is always true.
bool effect_identifiable(const MixedGraph& g, char x, char y);

}  // namespace cgbench
