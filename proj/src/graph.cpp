#include "cgbench/graph.hpp"

#include <algorithm>
#include <bit>

namespace cgbench {

const char* kind_name(GraphKind k) {
    switch (k) {
        case GraphKind::Undirected: return "undirected";
        case GraphKind::Directed: return "directed";
        case GraphKind::Dag: return "dag";
        case GraphKind::Admg: return "admg";
    }
    return "?";
}

GraphKind kind_from_name(const std::string& s) {
    if (s == "undirected") return GraphKind::Undirected;
    if (s == "directed") return GraphKind::Directed;
    if (s == "dag") return GraphKind::Dag;
    if (s == "admg") return GraphKind::Admg;
    fail(Err::ParseError, "unknown graph kind '" + s + "'");
}

std::string edge_text(char u, char v, EdgeCat cat) {
    std::string s(1, u);
    switch (cat) {
        case EdgeCat::Directed: s += "->"; break;
        case EdgeCat::Bidirected: s += "<->"; break;
        case EdgeCat::Undirected: s += "-"; break;
    }
    s += v;
    return s;
}

int MixedGraph::index_of(char v) const {
    for (int i = 0; i < n(); ++i)
        if (labels_[static_cast<std::size_t>(i)] == v) return i;
    return -1;
}

int MixedGraph::require_node(char v) const {
    int i = index_of(v);
    if (i < 0) fail(Err::UnknownNode, std::string("node '") + v + "' is not in the graph");
    return i;
}

int MixedGraph::edge_count() const {
    return static_cast<int>(directed_.size() + bidirected_.size() + undirected_.size());
}

Mask MixedGraph::ancestors(int v) const {
    Mask seen = 0, frontier = parents_[v];
    while (frontier) {
        seen |= frontier;
        Mask next = 0;
        for (int i = 0; i < n(); ++i)
            if (mask_has(frontier, i)) next |= parents_[i];
        frontier = next & ~seen;
    }
    return seen & ~mask_bit(v);
}

Mask MixedGraph::descendants(int v) const {
    Mask seen = 0, frontier = children_[v];
    while (frontier) {
        seen |= frontier;
        Mask next = 0;
        for (int i = 0; i < n(); ++i)
            if (mask_has(frontier, i)) next |= children_[i];
        frontier = next & ~seen;
    }
    return seen & ~mask_bit(v);
}

Mask MixedGraph::ancestors_of(Mask set, Mask within) const {
    Mask seen = set & within;
    for (;;) {
        Mask next = seen;
        for (int i = 0; i < n(); ++i)
            if (mask_has(seen, i)) next |= parents_[i] & within;
        if (next == seen) return seen;
        seen = next;
    }
}

Mask MixedGraph::descendants_of(Mask set, Mask within) const {
    Mask seen = set & within;
    for (;;) {
        Mask next = seen;
        for (int i = 0; i < n(); ++i)
            if (mask_has(seen, i)) next |= children_[i] & within;
        if (next == seen) return seen;
        seen = next;
    }
}

bool MixedGraph::directed_part_acyclic() const {
    // Kahn peel: repeatedly remove in-degree-0 nodes of the directed part.
    std::vector<int> indeg(static_cast<std::size_t>(n()), 0);
    for (int v = 0; v < n(); ++v) indeg[static_cast<std::size_t>(v)] = std::popcount(parents_[v]);
    std::vector<int> queue;
    for (int v = 0; v < n(); ++v)
        if (indeg[static_cast<std::size_t>(v)] == 0) queue.push_back(v);
    int removed = 0;
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        ++removed;
        Mask ch = children_[v];
        for (int w = 0; w < n(); ++w)
            if (mask_has(ch, w) && --indeg[static_cast<std::size_t>(w)] == 0) queue.push_back(w);
    }
    return removed == n();
}

std::vector<char> MixedGraph::to_labels(Mask m) const {
    std::vector<char> out;
    for (int i = 0; i < n(); ++i)
        if (mask_has(m, i)) out.push_back(labels_[static_cast<std::size_t>(i)]);
    std::sort(out.begin(), out.end());
    return out;
}

Mask MixedGraph::to_mask(const std::vector<char>& vs) const {
    Mask m = 0;
    for (char v : vs) m |= mask_bit(require_node(v));
    return m;
}

std::string MixedGraph::text_form() const {
    std::string s = "nodes: ";
    for (int i = 0; i < n(); ++i) {
        if (i) s += ", ";
        s += labels_[static_cast<std::size_t>(i)];
    }
    auto append = [&](const char* title, const std::vector<std::pair<int, int>>& edges, EdgeCat cat) {
        if (edges.empty()) return;
        s += "; ";
        s += title;
        s += ": ";
        for (std::size_t i = 0; i < edges.size(); ++i) {
            if (i) s += ", ";
            s += edge_text(label(edges[i].first), label(edges[i].second), cat);
        }
    };
    append("directed edges", directed_, EdgeCat::Directed);
    append("bi-directed edges", bidirected_, EdgeCat::Bidirected);
    append("undirected edges", undirected_, EdgeCat::Undirected);
    return s;
}

MixedGraph MixedGraph::build(GraphKind kind,
                             const std::vector<char>& nodes,
                             const std::vector<LabelPair>& directed,
                             const std::vector<LabelPair>& bidirected,
                             const std::vector<LabelPair>& undirected) {
    MixedGraph g;
    g.kind_ = kind;
    g.labels_ = nodes;
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = i + 1; j < nodes.size(); ++j)
            if (nodes[i] == nodes[j])
                fail(Err::DuplicateEdge, std::string("duplicate node label '") + nodes[i] + "'");

    if (kind == GraphKind::Undirected && !(directed.empty() && bidirected.empty()))
        fail(Err::EdgeKindMismatch, "undirected graph cannot carry directed or bidirected edges");
    if ((kind == GraphKind::Directed || kind == GraphKind::Dag) && !(bidirected.empty() && undirected.empty()))
        fail(Err::EdgeKindMismatch, std::string(kind_name(kind)) + " graph admits directed edges only");
    if (kind == GraphKind::Admg && !undirected.empty())
        fail(Err::EdgeKindMismatch, "admg admits directed and bidirected edges only");

    int nn = g.n();
    g.parents_.assign(static_cast<std::size_t>(nn), 0);
    g.children_.assign(static_cast<std::size_t>(nn), 0);
    g.siblings_.assign(static_cast<std::size_t>(nn), 0);
    g.neighbors_.assign(static_cast<std::size_t>(nn), 0);

    auto endpoint = [&](char v) {
        int i = g.index_of(v);
        if (i < 0) fail(Err::UnknownEndpoint, std::string("edge endpoint '") + v + "' is not a declared node");
        return i;
    };

    for (const auto& [tu, tv] : directed) {
        int u = endpoint(tu), v = endpoint(tv);
        if (u == v) fail(Err::SelfLoop, std::string("self-loop on '") + tu + "'");
        if (g.has_directed(u, v))
            fail(Err::DuplicateEdge, "directed edge " + edge_text(tu, tv, EdgeCat::Directed) + " declared twice");
        g.directed_.emplace_back(u, v);
        g.children_[static_cast<std::size_t>(u)] |= mask_bit(v);
        g.parents_[static_cast<std::size_t>(v)] |= mask_bit(u);
    }
    for (const auto& [tu, tv] : bidirected) {
        int u = endpoint(tu), v = endpoint(tv);
        if (u == v) fail(Err::SelfLoop, std::string("self-loop on '") + tu + "'");
        if (g.has_bidirected(u, v))
            fail(Err::DuplicateEdge, "bidirected edge " + edge_text(tu, tv, EdgeCat::Bidirected) + " declared twice");
        g.bidirected_.emplace_back(u, v);
        g.siblings_[static_cast<std::size_t>(u)] |= mask_bit(v);
        g.siblings_[static_cast<std::size_t>(v)] |= mask_bit(u);
    }
    for (const auto& [tu, tv] : undirected) {
        int u = endpoint(tu), v = endpoint(tv);
        if (u == v) fail(Err::SelfLoop, std::string("self-loop on '") + tu + "'");
        if (g.has_undirected(u, v))
            fail(Err::DuplicateEdge, "undirected edge " + edge_text(tu, tv, EdgeCat::Undirected) + " declared twice");
        g.undirected_.emplace_back(u, v);
        g.neighbors_[static_cast<std::size_t>(u)] |= mask_bit(v);
        g.neighbors_[static_cast<std::size_t>(v)] |= mask_bit(u);
    }

    if ((kind == GraphKind::Dag || kind == GraphKind::Admg) && !g.directed_part_acyclic())
        fail(Err::CycleInDag, std::string("directed part of a ") + kind_name(kind) + " must be acyclic");

    return g;
}

namespace {

std::string trimmed(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\n\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\n\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_on(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

}  // namespace

MixedGraph parse_graph_text(GraphKind kind, const std::string& text) {
    std::vector<char> nodes;
    std::vector<MixedGraph::LabelPair> directed, bidirected, undirected;
    for (const std::string& raw : split_on(text, ';')) {
        std::string section = trimmed(raw);
        if (section.empty()) continue;
        std::size_t colon = section.find(':');
        if (colon == std::string::npos)
            fail(Err::ParseError, "graph section lacks a title: '" + section + "'");
        std::string title = trimmed(section.substr(0, colon));
        std::string body = trimmed(section.substr(colon + 1));
        for (const std::string& rawitem : split_on(body, ',')) {
            std::string item = trimmed(rawitem);
            if (item.empty()) continue;
            if (title == "nodes") {
                if (item.size() != 1)
                    fail(Err::ParseError, "node label must be one character: '" + item + "'");
                nodes.push_back(item[0]);
                continue;
            }
            std::string sym;
            std::vector<MixedGraph::LabelPair>* into = nullptr;
            if (title == "directed edges") {
                sym = "->";
                into = &directed;
            } else if (title == "bi-directed edges" || title == "bidirected edges") {
                sym = "<->";
                into = &bidirected;
            } else if (title == "undirected edges") {
                sym = "-";
                into = &undirected;
            } else {
                fail(Err::ParseError, "unknown graph section '" + title + "'");
            }
            std::string a, b;
            std::size_t at = item.find(sym);
            if (at != std::string::npos) {
                a = trimmed(item.substr(0, at));
                b = trimmed(item.substr(at + sym.size()));
            }
            if (a.size() != 1 || b.size() != 1)
                fail(Err::ParseError, "malformed edge '" + item + "' in section '" + title + "'");
            into->push_back({a[0], b[0]});
        }
    }
    return MixedGraph::build(kind, nodes, directed, bidirected, undirected);
}

}  // namespace cgbench
