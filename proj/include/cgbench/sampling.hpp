#pragma once

#include <cstdint>

#include "cgbench/graph.hpp"
#include "cgbench/rng.hpp"

namespace cgbench {

struct GraphSpec {
    GraphKind kind = GraphKind::Dag;
    int n_nodes = 0;
    int n_edges = 0;            // total over every category
    int n_bidirected = 0;       // Admg only; the rest are directed
    bool connected = true;
    double bi_ratio_cap = 0.5;  // max n_bidirected / n_directed; negative lifts the cap
};

// most edges a graph of this kind can hold (Admg counts a directed and a
// bidirected slot per pair)
int max_edges(GraphKind kind, int n_nodes);

// Draws a graph with exactly the requested counts. Labels are a random
// subset of the alphabet in random order, both taken from the rng.
// connected=true guarantees a connected skeleton (all categories pooled).
// Directed parts of Dag/Admg draws are acyclic by construction. Throws
// InfeasibleSpec when the counts cannot be realized.
MixedGraph sample_graph(const GraphSpec& spec, Rng& rng);
MixedGraph sample_graph(const GraphSpec& spec, std::uint64_t seed);

}  // namespace cgbench
