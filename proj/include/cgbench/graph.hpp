#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cgbench/errors.hpp"

namespace cgbench {

enum class GraphKind { Undirected, Directed, Dag, Admg };

const char* kind_name(GraphKind k);
GraphKind kind_from_name(const std::string& s);

// Node subsets as bitmasks over stored node indices (at most 26 nodes).
using Mask = std::uint32_t;

inline bool mask_has(Mask m, int i) { return (m >> i) & 1u; }
inline Mask mask_bit(int i) { return Mask(1) << i; }
// bit positions are node indices; labels must go through index_of first
bool mask_has(Mask, char) = delete;
Mask mask_bit(char) = delete;

// Immutable mixed graph: directed, bidirected and undirected edges over
// single-letter node labels. Validation happens once in build(); every
// query afterwards can assume the invariants hold. Node order is the
// stored (randomized) order and carries no meaning beyond presentation.
class MixedGraph {
public:
    using LabelPair = std::pair<char, char>;

    static MixedGraph build(GraphKind kind,
                            const std::vector<char>& nodes,
                            const std::vector<LabelPair>& directed,
                            const std::vector<LabelPair>& bidirected = {},
                            const std::vector<LabelPair>& undirected = {});

    GraphKind kind() const { return kind_; }
    int n() const { return static_cast<int>(labels_.size()); }
    const std::vector<char>& labels() const { return labels_; }
    char label(int i) const { return labels_[static_cast<std::size_t>(i)]; }

    bool has_node(char v) const { return index_of(v) >= 0; }
    int index_of(char v) const;
    int require_node(char v) const;  // throws UnknownNode

    // index pairs in insertion order; directed pairs are (tail, head)
    const std::vector<std::pair<int, int>>& directed() const { return directed_; }
    const std::vector<std::pair<int, int>>& bidirected() const { return bidirected_; }
    const std::vector<std::pair<int, int>>& undirected() const { return undirected_; }
    int edge_count() const;

    bool has_directed(int tail, int head) const { return mask_has(children_[tail], head); }
    bool has_bidirected(int u, int v) const { return mask_has(siblings_[u], v); }
    bool has_undirected(int u, int v) const { return mask_has(neighbors_[u], v); }
    // adjacency in any category
    bool adjacent(int u, int v) const {
        return has_directed(u, v) || has_directed(v, u) || has_bidirected(u, v) || has_undirected(u, v);
    }

    Mask parents(int v) const { return parents_[v]; }
    Mask children(int v) const { return children_[v]; }
    Mask siblings(int v) const { return siblings_[v]; }
    Mask neighbors(int v) const { return neighbors_[v]; }

    // tripwires: these take node indices, not labels; use index_of first
    bool has_directed(char, char) const = delete;
    bool has_bidirected(char, char) const = delete;
    bool has_undirected(char, char) const = delete;
    bool adjacent(char, char) const = delete;
    Mask parents(char) const = delete;
    Mask children(char) const = delete;
    Mask siblings(char) const = delete;
    Mask neighbors(char) const = delete;
    Mask ancestors(char) const = delete;
    Mask descendants(char) const = delete;
    char label(char) const = delete;

    Mask all_mask() const { return (n() >= 32) ? ~Mask(0) : (mask_bit(n()) - 1); }

    // irreflexive transitive closures over the directed part
    Mask ancestors(int v) const;
    Mask descendants(int v) const;
    // reflexive closure of a set, optionally restricted to `within`
    Mask ancestors_of(Mask set, Mask within) const;
    Mask descendants_of(Mask set, Mask within) const;

    bool directed_part_acyclic() const;

    std::vector<char> to_labels(Mask m) const;        // alphabetical
    Mask to_mask(const std::vector<char>& vs) const;  // throws UnknownNode

    // prompt form: `nodes: A, B; directed edges: A->B; ...`, empty categories omitted
    std::string text_form() const;

private:
    MixedGraph() = default;

    GraphKind kind_ = GraphKind::Dag;
    std::vector<char> labels_;
    std::vector<std::pair<int, int>> directed_, bidirected_, undirected_;
    std::vector<Mask> parents_, children_, siblings_, neighbors_;
};

enum class EdgeCat { Directed, Bidirected, Undirected };

std::string edge_text(char u, char v, EdgeCat cat);

// Inverse of text_form, whitespace tolerant. Throws ParseError on malformed
// input and propagates build errors (cycles, duplicates, unknown endpoints).
MixedGraph parse_graph_text(GraphKind kind, const std::string& text);

}  // namespace cgbench
