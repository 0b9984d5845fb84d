#include "cgbench/basic_ops.hpp"

#include <algorithm>

namespace cgbench {

std::vector<char> list_nodes(const MixedGraph& g) { return g.labels(); }

std::vector<std::string> list_edges(const MixedGraph& g) {
    std::vector<std::string> out;
    for (const auto& [u, v] : g.directed()) out.push_back(edge_text(g.label(u), g.label(v), EdgeCat::Directed));
    // symmetric edges in alphabetical endpoint order, whatever order they were sampled in
    for (const auto& [u, v] : g.bidirected()) {
        char a = g.label(u), b = g.label(v);
        out.push_back(edge_text(std::min(a, b), std::max(a, b), EdgeCat::Bidirected));
    }
    for (const auto& [u, v] : g.undirected()) {
        char a = g.label(u), b = g.label(v);
        out.push_back(edge_text(std::min(a, b), std::max(a, b), EdgeCat::Undirected));
    }
    return out;
}

int count_nodes(const MixedGraph& g) { return g.n(); }
int count_edges(const MixedGraph& g) { return g.edge_count(); }

bool has_node_query(const MixedGraph& g, char v) { return g.has_node(v); }

namespace {

// "A<->B" / "A->B" / "B<-A" / "A-B", spaces tolerated
bool parse_edge_text(const std::string& raw, char& u, char& v, EdgeCat& cat) {
    std::string s;
    for (char c : raw)
        if (c != ' ') s += c;
    std::size_t p;
    bool reversed = false;
    if ((p = s.find("<->")) != std::string::npos) cat = EdgeCat::Bidirected;
    else if ((p = s.find("->")) != std::string::npos) cat = EdgeCat::Directed;
    else if ((p = s.find("<-")) != std::string::npos) cat = EdgeCat::Directed, reversed = true;
    else if ((p = s.find('-')) != std::string::npos) cat = EdgeCat::Undirected;
    else return false;
    std::size_t arrow = (cat == EdgeCat::Bidirected) ? 3 : (cat == EdgeCat::Directed ? 2 : 1);
    if (p != 1 || s.size() != p + arrow + 1) return false;
    u = s[0];
    v = s[p + arrow];
    if (reversed) std::swap(u, v);
    return true;
}

}  // namespace

bool has_edge_query(const MixedGraph& g, const std::string& edge) {
    char u, v;
    EdgeCat cat;
    if (!parse_edge_text(edge, u, v, cat)) return false;
    int iu = g.index_of(u), iv = g.index_of(v);
    if (iu < 0 || iv < 0) return false;
    switch (cat) {
        case EdgeCat::Directed: return g.has_directed(iu, iv);
        case EdgeCat::Bidirected: return g.has_bidirected(iu, iv);
        case EdgeCat::Undirected: return g.has_undirected(iu, iv);
    }
    return false;
}

const char* relation_name(Relation r) {
    switch (r) {
        case Relation::Parents: return "parents";
        case Relation::Children: return "children";
        case Relation::Ancestors: return "ancestors";
        case Relation::Descendants: return "descendants";
    }
    return "?";
}

std::vector<char> relatives(const MixedGraph& g, char v, Relation rel) {
    if (g.kind() == GraphKind::Undirected)
        fail(Err::WrongGraphKind, "kinship queries need a directed part");
    int i = g.require_node(v);
    Mask m = 0;
    switch (rel) {
        case Relation::Parents: m = g.parents(i); break;
        case Relation::Children: m = g.children(i); break;
        case Relation::Ancestors: m = g.ancestors(i); break;
        case Relation::Descendants: m = g.descendants(i); break;
    }
    return g.to_labels(m);
}

const char* triple_kind_name(TripleKind k) {
    switch (k) {
        case TripleKind::Chain: return "chain";
        case TripleKind::Fork: return "fork";
        case TripleKind::VStructure: return "v-structure";
    }
    return "?";
}

const char* triple_kind_plural(TripleKind k) {
    switch (k) {
        case TripleKind::Chain: return "chains";
        case TripleKind::Fork: return "forks";
        case TripleKind::VStructure: return "v-structures";
    }
    return "?";
}

std::vector<Triple> enumerate_triples(const MixedGraph& g, TripleKind k) {
    std::vector<Triple> out;
    int n = g.n();
    for (int m = 0; m < n; ++m) {
        for (int a = 0; a < n; ++a) {
            if (a == m) continue;
            for (int b = 0; b < n; ++b) {
                if (b == m || b == a) continue;
                char la = g.label(a), lm = g.label(m), lb = g.label(b);
                switch (k) {
                    case TripleKind::Chain:
                        // canonical in arrow direction; reversed duplicate never matches
                        if (g.has_directed(a, m) && g.has_directed(m, b)) out.push_back({la, lm, lb});
                        break;
                    case TripleKind::Fork:
                        if (la < lb && g.has_directed(m, a) && g.has_directed(m, b)) out.push_back({la, lm, lb});
                        break;
                    case TripleKind::VStructure:
                        if (la < lb && g.has_directed(a, m) && g.has_directed(b, m) && !g.adjacent(a, b))
                            out.push_back({la, lm, lb});
                        break;
                }
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const Triple& x, const Triple& y) {
        if (x.a != y.a) return x.a < y.a;
        if (x.m != y.m) return x.m < y.m;
        return x.b < y.b;
    });
    return out;
}

std::optional<TripleKind> classify_triple(const MixedGraph& g, char a, char m, char b) {
    int ia = g.require_node(a), im = g.require_node(m), ib = g.require_node(b);
    if (ia == im || im == ib || ia == ib) return std::nullopt;
    bool am = g.has_directed(ia, im), ma = g.has_directed(im, ia);
    bool mb = g.has_directed(im, ib), bm = g.has_directed(ib, im);
    if ((am && mb) || (ma && bm)) return TripleKind::Chain;
    if (ma && mb) return TripleKind::Fork;
    if (am && bm && !g.adjacent(ia, ib)) return TripleKind::VStructure;
    return std::nullopt;  // sides missing, undirected/bidirected, or shielded collider
}

namespace {

int step_rank(Step s) {
    switch (s) {
        case Step::Forward: return 0;
        case Step::Backward: return 1;
        case Step::Bidirected: return 2;
        case Step::Undirected: return 3;
    }
    return 4;
}

struct Link {
    int to;
    Step step;
};

// one entry per traversable edge end, so parallel edges stay distinct
std::vector<std::vector<Link>> build_links(const MixedGraph& g) {
    std::vector<std::vector<Link>> links(static_cast<std::size_t>(g.n()));
    for (const auto& [u, v] : g.directed()) {
        links[static_cast<std::size_t>(u)].push_back({v, Step::Forward});
        links[static_cast<std::size_t>(v)].push_back({u, Step::Backward});
    }
    for (const auto& [u, v] : g.bidirected()) {
        links[static_cast<std::size_t>(u)].push_back({v, Step::Bidirected});
        links[static_cast<std::size_t>(v)].push_back({u, Step::Bidirected});
    }
    for (const auto& [u, v] : g.undirected()) {
        links[static_cast<std::size_t>(u)].push_back({v, Step::Undirected});
        links[static_cast<std::size_t>(v)].push_back({u, Step::Undirected});
    }
    for (auto& ls : links)
        std::sort(ls.begin(), ls.end(), [](const Link& a, const Link& b) {
            if (a.to != b.to) return a.to < b.to;
            return step_rank(a.step) < step_rank(b.step);
        });
    return links;
}

void dfs_paths(const MixedGraph& g, const std::vector<std::vector<Link>>& links, int cur, int target,
               Mask visited, NodePath& acc, std::vector<NodePath>& out) {
    if (cur == target) {
        out.push_back(acc);
        return;
    }
    for (const Link& l : links[static_cast<std::size_t>(cur)]) {
        if (mask_has(visited, l.to)) continue;
        acc.nodes.push_back(g.label(l.to));
        acc.steps.push_back(l.step);
        dfs_paths(g, links, l.to, target, visited | mask_bit(l.to), acc, out);
        acc.nodes.pop_back();
        acc.steps.pop_back();
    }
}

bool path_less(const NodePath& a, const NodePath& b) {
    if (a.nodes.size() != b.nodes.size()) return a.nodes.size() < b.nodes.size();
    if (a.nodes != b.nodes) return a.nodes < b.nodes;
    for (std::size_t i = 0; i < a.steps.size(); ++i)
        if (a.steps[i] != b.steps[i]) return step_rank(a.steps[i]) < step_rank(b.steps[i]);
    return false;
}

}  // namespace

std::string NodePath::text() const {
    std::string s(1, nodes.at(0));
    for (std::size_t i = 0; i < steps.size(); ++i) {
        switch (steps[i]) {
            case Step::Forward: s += " -> "; break;
            case Step::Backward: s += " <- "; break;
            case Step::Bidirected: s += " <-> "; break;
            case Step::Undirected: s += " - "; break;
        }
        s += nodes[i + 1];
    }
    return s;
}

std::vector<NodePath> all_paths(const MixedGraph& g, char x, char y) {
    int ix = g.require_node(x), iy = g.require_node(y);
    if (ix == iy) fail(Err::InvalidPath, "path endpoints must differ");
    auto links = build_links(g);
    std::vector<NodePath> out;
    NodePath acc;
    acc.nodes.push_back(x);
    dfs_paths(g, links, ix, iy, mask_bit(ix), acc, out);
    std::sort(out.begin(), out.end(), path_less);
    return out;
}

int count_paths(const MixedGraph& g, char x, char y) { return static_cast<int>(all_paths(g, x, y).size()); }

NodePath shortest_path(const MixedGraph& g, char x, char y) {
    auto paths = all_paths(g, x, y);
    if (paths.empty()) fail(Err::NoPathExists, std::string("no path between '") + x + "' and '" + y + "'");
    return paths.front();
}

NodePath one_path(const MixedGraph& g, char x, char y) { return shortest_path(g, x, y); }

NodePath longest_path(const MixedGraph& g, char x, char y) {
    auto paths = all_paths(g, x, y);
    if (paths.empty()) fail(Err::NoPathExists, std::string("no path between '") + x + "' and '" + y + "'");
    // sorted by length then lexicographically: first of the longest group
    std::size_t len = paths.back().nodes.size();
    for (const auto& p : paths)
        if (p.nodes.size() == len) return p;
    return paths.back();
}

bool verify_path(const MixedGraph& g, const NodePath& p) {
    if (p.nodes.size() < 2 || p.steps.size() + 1 != p.nodes.size()) return false;
    for (std::size_t i = 0; i < p.nodes.size(); ++i) {
        if (g.index_of(p.nodes[i]) < 0) return false;
        for (std::size_t j = i + 1; j < p.nodes.size(); ++j)
            if (p.nodes[i] == p.nodes[j]) return false;
    }
    for (std::size_t i = 0; i < p.steps.size(); ++i) {
        int u = g.index_of(p.nodes[i]), v = g.index_of(p.nodes[i + 1]);
        bool ok = false;
        switch (p.steps[i]) {
            case Step::Forward: ok = g.has_directed(u, v); break;
            case Step::Backward: ok = g.has_directed(v, u); break;
            case Step::Bidirected: ok = g.has_bidirected(u, v); break;
            case Step::Undirected: ok = g.has_undirected(u, v); break;
        }
        if (!ok) return false;
    }
    return true;
}

bool cycle_exists(const MixedGraph& g) {
    if (g.kind() == GraphKind::Undirected)
        fail(Err::WrongGraphKind, "cycle queries need a directed part");
    return !g.directed_part_acyclic();
}

namespace {

// shortest directed distance from every node to target, following edges forward
std::vector<int> dist_to(const MixedGraph& g, int target) {
    std::vector<int> dist(static_cast<std::size_t>(g.n()), -1);
    dist[static_cast<std::size_t>(target)] = 0;
    std::vector<int> frontier{target};
    int d = 0;
    while (!frontier.empty()) {
        ++d;
        std::vector<int> next;
        for (int v : frontier)
            for (int u = 0; u < g.n(); ++u)
                if (g.has_directed(u, v) && dist[static_cast<std::size_t>(u)] < 0) {
                    dist[static_cast<std::size_t>(u)] = d;
                    next.push_back(u);
                }
        frontier = std::move(next);
    }
    return dist;
}

}  // namespace

std::vector<char> find_cycle(const MixedGraph& g) {
    if (!cycle_exists(g)) fail(Err::NoCycleExists, "graph has no directed cycle");
    std::vector<char> best;
    for (int s = 0; s < g.n(); ++s) {
        // shortest cycle through s: edge s->u plus shortest path u->s
        auto dist = dist_to(g, s);
        int best_len = -1;
        for (int u = 0; u < g.n(); ++u)
            if (g.has_directed(s, u) && dist[static_cast<std::size_t>(u)] >= 0) {
                int len = dist[static_cast<std::size_t>(u)] + 1;
                if (best_len < 0 || len < best_len) best_len = len;
            }
        if (best_len < 0) continue;
        // rebuild greedily, taking the alphabetically smallest next node on a shortest route
        std::vector<char> cyc{g.label(s)};
        int cur = s, remaining = best_len;
        while (remaining > 0) {
            int pick = -1;
            for (int u = 0; u < g.n(); ++u) {
                if (!g.has_directed(cur, u)) continue;
                int du = (u == s) ? 0 : dist[static_cast<std::size_t>(u)];
                if (du == remaining - 1 && (u != s || remaining == 1) &&
                    (pick < 0 || g.label(u) < g.label(pick)))
                    pick = u;
            }
            cur = pick;
            --remaining;
            if (cur != s) cyc.push_back(g.label(cur));
        }
        // canonical rotation: start at the smallest label
        auto smallest = std::min_element(cyc.begin(), cyc.end());
        std::rotate(cyc.begin(), smallest, cyc.end());
        if (best.empty() || cyc.size() < best.size() || (cyc.size() == best.size() && cyc < best)) best = cyc;
    }
    best.push_back(best.front());
    return best;
}

bool verify_cycle(const MixedGraph& g, const std::vector<char>& seq) {
    std::vector<char> s = seq;
    if (s.size() >= 2 && s.front() == s.back()) s.pop_back();  // accept closed form
    if (s.size() < 2) return false;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (g.index_of(s[i]) < 0) return false;
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (s[i] == s[j]) return false;
    }
    for (std::size_t i = 0; i < s.size(); ++i) {
        int u = g.index_of(s[i]), v = g.index_of(s[(i + 1) % s.size()]);
        if (!g.has_directed(u, v)) return false;
    }
    return true;
}

std::vector<char> topological_order(const MixedGraph& g) {
    if (g.kind() == GraphKind::Undirected)
        fail(Err::WrongGraphKind, "topological order needs a directed part");
    std::vector<int> indeg(static_cast<std::size_t>(g.n()), 0);
    for (const auto& [u, v] : g.directed()) {
        (void)u;
        ++indeg[static_cast<std::size_t>(v)];
    }
    std::vector<char> order;
    Mask done = 0;
    while (static_cast<int>(order.size()) < g.n()) {
        // alphabetically smallest ready node, for a canonical result
        int pick = -1;
        for (int v = 0; v < g.n(); ++v)
            if (!mask_has(done, v) && indeg[static_cast<std::size_t>(v)] == 0 &&
                (pick < 0 || g.label(v) < g.label(pick)))
                pick = v;
        if (pick < 0) fail(Err::CyclicGraph, "no topological order: directed part is cyclic");
        done |= mask_bit(pick);
        order.push_back(g.label(pick));
        for (int w = 0; w < g.n(); ++w)
            if (g.has_directed(pick, w)) --indeg[static_cast<std::size_t>(w)];
    }
    return order;
}

bool verify_topological(const MixedGraph& g, const std::vector<char>& seq) {
    if (static_cast<int>(seq.size()) != g.n()) return false;
    std::vector<int> pos(26, -1);
    for (std::size_t i = 0; i < seq.size(); ++i) {
        int v = g.index_of(seq[i]);
        if (v < 0 || pos[static_cast<std::size_t>(v)] >= 0) return false;
        pos[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
    for (const auto& [u, v] : g.directed())
        if (pos[static_cast<std::size_t>(u)] > pos[static_cast<std::size_t>(v)]) return false;
    return true;
}

}  // namespace cgbench
