#include "cgbench/causal_paths.hpp"

#include <algorithm>

namespace cgbench {

namespace {

void dfs_directed(const MixedGraph& g, int cur, int target, Mask visited, NodePath& acc,
                  std::vector<NodePath>& out) {
    if (cur == target) {
        out.push_back(acc);
        return;
    }
    for (int w = 0; w < g.n(); ++w) {
        if (!g.has_directed(cur, w) || mask_has(visited, w)) continue;
        acc.nodes.push_back(g.label(w));
        acc.steps.push_back(Step::Forward);
        dfs_directed(g, w, target, visited | mask_bit(w), acc, out);
        acc.nodes.pop_back();
        acc.steps.pop_back();
    }
}

}  // namespace

std::vector<NodePath> directed_paths(const MixedGraph& g, char x, char y) {
    int ix = g.require_node(x), iy = g.require_node(y);
    if (ix == iy) fail(Err::InvalidPath, "path endpoints must differ");
    std::vector<NodePath> out;
    NodePath acc;
    acc.nodes.push_back(x);
    dfs_directed(g, ix, iy, mask_bit(ix), acc, out);
    std::sort(out.begin(), out.end(), [](const NodePath& a, const NodePath& b) {
        if (a.nodes.size() != b.nodes.size()) return a.nodes.size() < b.nodes.size();
        return a.nodes < b.nodes;
    });
    return out;
}

int directed_path_count(const MixedGraph& g, char x, char y) {
    return static_cast<int>(directed_paths(g, x, y).size());
}

bool directed_path_exists(const MixedGraph& g, char x, char y) {
    int ix = g.require_node(x), iy = g.require_node(y);
    if (ix == iy) fail(Err::InvalidPath, "path endpoints must differ");
    return mask_has(g.descendants(ix), iy);
}

bool verify_directed_path(const MixedGraph& g, char x, char y, const std::vector<char>& seq) {
    if (seq.size() < 2 || seq.front() != x || seq.back() != y) return false;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (g.index_of(seq[i]) < 0) return false;
        for (std::size_t j = i + 1; j < seq.size(); ++j)
            if (seq[i] == seq[j]) return false;
    }
    for (std::size_t i = 0; i + 1 < seq.size(); ++i)
        if (!g.has_directed(g.index_of(seq[i]), g.index_of(seq[i + 1]))) return false;
    return true;
}

namespace {

bool first_step_into_x(const NodePath& p) {
    return p.steps.front() == Step::Backward || p.steps.front() == Step::Bidirected;
}

}  // namespace

std::vector<NodePath> backdoor_paths(const MixedGraph& g, char x, char y) {
    std::vector<NodePath> out;
    for (auto& p : all_paths(g, x, y))
        if (first_step_into_x(p)) out.push_back(std::move(p));
    return out;
}

int backdoor_path_count(const MixedGraph& g, char x, char y) {
    return static_cast<int>(backdoor_paths(g, x, y).size());
}

NodePath backdoor_shortest(const MixedGraph& g, char x, char y) {
    auto paths = backdoor_paths(g, x, y);
    if (paths.empty())
        fail(Err::NoBackdoorPath, std::string("no backdoor path from '") + x + "' to '" + y + "'");
    return paths.front();
}

NodePath backdoor_longest(const MixedGraph& g, char x, char y) {
    auto paths = backdoor_paths(g, x, y);
    if (paths.empty())
        fail(Err::NoBackdoorPath, std::string("no backdoor path from '") + x + "' to '" + y + "'");
    std::size_t len = paths.back().nodes.size();
    for (const auto& p : paths)
        if (p.nodes.size() == len) return p;
    return paths.back();
}

bool verify_backdoor_path(const MixedGraph& g, char x, char y, const std::vector<char>& seq) {
    if (seq.size() < 2 || seq.front() != x || seq.back() != y) return false;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (g.index_of(seq[i]) < 0) return false;
        for (std::size_t j = i + 1; j < seq.size(); ++j)
            if (seq[i] == seq[j]) return false;
    }
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
        int u = g.index_of(seq[i]), v = g.index_of(seq[i + 1]);
        if (!g.has_directed(u, v) && !g.has_directed(v, u) && !g.has_bidirected(u, v) &&
            !g.has_undirected(u, v))
            return false;
    }
    int x0 = g.index_of(seq[0]), x1 = g.index_of(seq[1]);
    return g.has_directed(x1, x0) || g.has_bidirected(x0, x1);
}

}  // namespace cgbench
