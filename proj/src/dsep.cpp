#include "cgbench/dsep.hpp"

#include <algorithm>
#include <array>

namespace cgbench {

namespace {

bool head_at_second(Step s) { return s == Step::Forward || s == Step::Bidirected; }
bool head_at_first(Step s) { return s == Step::Backward || s == Step::Bidirected; }

}  // namespace

BlockingVerdict is_path_blocked(const MixedGraph& g, const NodePath& p, const std::vector<char>& z) {
    if (!verify_path(g, p)) fail(Err::InvalidPath, "sequence is not a path of the graph");
    Mask zm = g.to_mask(z);
    if (mask_has(zm, g.index_of(p.nodes.front())) || mask_has(zm, g.index_of(p.nodes.back())))
        fail(Err::EndpointInZ, "conditioning set must not contain path endpoints");

    for (std::size_t i = 1; i + 1 < p.nodes.size(); ++i) {
        int m = g.index_of(p.nodes[i]);
        bool collider = head_at_second(p.steps[i - 1]) && head_at_first(p.steps[i]);
        if (!collider) {
            if (mask_has(zm, m)) return {true, p.nodes[i], BlockRule::NonColliderInZ};
        } else {
            if (((mask_bit(m) | g.descendants(m)) & zm) == 0)
                return {true, p.nodes[i], BlockRule::ColliderClosed};
        }
    }
    return {};
}

namespace {

// interior nodes split by collider status
void interior_split(const MixedGraph& g, const NodePath& p, std::vector<char>& noncolliders,
                    std::vector<char>& colliders) {
    for (std::size_t i = 1; i + 1 < p.nodes.size(); ++i) {
        bool collider = head_at_second(p.steps[i - 1]) && head_at_first(p.steps[i]);
        (collider ? colliders : noncolliders).push_back(p.nodes[i]);
    }
    (void)g;
}

}  // namespace

std::vector<char> blocking_set_valid(const MixedGraph& g, const NodePath& p) {
    if (p.nodes.size() < 3) fail(Err::Unblockable, "single-edge path cannot be blocked");
    std::vector<char> noncolliders, colliders;
    interior_split(g, p, noncolliders, colliders);
    std::sort(noncolliders.begin(), noncolliders.end());
    return noncolliders;  // empty when all interiors are colliders; ∅ blocks then
}

std::vector<char> blocking_set_minimal(const MixedGraph& g, const NodePath& p) {
    if (p.nodes.size() < 3) fail(Err::Unblockable, "single-edge path cannot be blocked");
    std::vector<char> noncolliders, colliders;
    interior_split(g, p, noncolliders, colliders);
    if (!colliders.empty()) return {};  // an unconditioned collider blocks already
    return {*std::min_element(noncolliders.begin(), noncolliders.end())};
}

bool d_separated(const MixedGraph& g, char x, char y, const std::vector<char>& z) {
    int ix = g.require_node(x), iy = g.require_node(y);
    if (ix == iy) fail(Err::InvalidPath, "d-separation endpoints must differ");
    Mask zm = g.to_mask(z);
    if (mask_has(zm, ix) || mask_has(zm, iy))
        fail(Err::EndpointInZ, "conditioning set must not contain the endpoints");

    // collider at v can be passed iff v or one of its descendants is in Z
    std::vector<char> openable(static_cast<std::size_t>(g.n()), 0);
    for (int v = 0; v < g.n(); ++v)
        openable[static_cast<std::size_t>(v)] = ((mask_bit(v) | g.descendants(v)) & zm) != 0;

    // walk states: (node, arrived-with-arrowhead-at-node)
    std::vector<std::array<char, 2>> seen(static_cast<std::size_t>(g.n()), {0, 0});
    std::vector<std::pair<int, bool>> stack;
    auto push = [&](int v, bool head) {
        if (v == iy) return true;
        if (!seen[static_cast<std::size_t>(v)][head ? 1 : 0]) {
            seen[static_cast<std::size_t>(v)][head ? 1 : 0] = 1;
            stack.emplace_back(v, head);
        }
        return false;
    };
    auto leave = [&](int v, bool in_head, auto self_push) -> bool {
        // try every edge out of v; the (in_head, out-side arrowhead) pair
        // decides whether v acts as a collider on the walk
        for (int w = 0; w < g.n(); ++w) {
            struct End {
                bool present, head_v, head_w;
            } ends[3] = {
                {g.has_directed(v, w), false, true},
                {g.has_directed(w, v), true, false},
                {g.has_bidirected(v, w), true, true},
            };
            bool undir = g.has_undirected(v, w);
            for (const auto& e : ends)
                if (e.present) {
                    bool collider = in_head && e.head_v;
                    bool pass = collider ? openable[static_cast<std::size_t>(v)] : !mask_has(zm, v);
                    if (pass && self_push(w, e.head_w)) return true;
                }
            if (undir) {
                bool collider = false;  // undirected ends carry no arrowheads
                (void)collider;
                if (!mask_has(zm, v) && self_push(w, false)) return true;
            }
        }
        return false;
    };

    // x is an endpoint: leave through every edge unconditionally
    for (int w = 0; w < g.n(); ++w) {
        if (g.has_directed(ix, w) && push(w, true)) return false;
        if (g.has_directed(w, ix) && push(w, false)) return false;
        if (g.has_bidirected(ix, w) && push(w, true)) return false;
        if (g.has_undirected(ix, w) && push(w, false)) return false;
    }
    while (!stack.empty()) {
        auto [v, head] = stack.back();
        stack.pop_back();
        if (leave(v, head, push)) return false;
    }
    return true;
}

namespace {

std::optional<std::vector<char>> separator_search(const MixedGraph& g, char x, char y, bool minimal) {
    int ix = g.require_node(x), iy = g.require_node(y);
    std::vector<char> candidates;
    for (int v = 0; v < g.n(); ++v)
        if (v != ix && v != iy) candidates.push_back(g.label(v));
    std::sort(candidates.begin(), candidates.end());

    std::uint32_t total = 1u << candidates.size();
    std::vector<std::vector<char>> sets;
    sets.reserve(total);
    for (std::uint32_t m = 0; m < total; ++m) {
        std::vector<char> z;
        for (std::size_t i = 0; i < candidates.size(); ++i)
            if ((m >> i) & 1u) z.push_back(candidates[i]);
        sets.push_back(std::move(z));
    }
    if (minimal)
        std::sort(sets.begin(), sets.end(), [](const auto& a, const auto& b) {
            if (a.size() != b.size()) return a.size() < b.size();
            return a < b;
        });
    for (const auto& z : sets)
        if (d_separated(g, x, y, z)) return z;
    return std::nullopt;
}

}  // namespace

std::optional<std::vector<char>> d_separator_valid(const MixedGraph& g, char x, char y) {
    return separator_search(g, x, y, false);
}

std::optional<std::vector<char>> d_separator_minimal(const MixedGraph& g, char x, char y) {
    return separator_search(g, x, y, true);
}

}  // namespace cgbench
