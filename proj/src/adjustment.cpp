#include "cgbench/adjustment.hpp"

#include <algorithm>
#include <bit>

#include "cgbench/causal_paths.hpp"
#include "cgbench/dsep.hpp"
#include "cgbench/errors.hpp"

namespace cgbench {
namespace {

void check_query(const MixedGraph& g, char x, char y) {
    if (g.kind() == GraphKind::Undirected)
        fail(Err::WrongGraphKind, "adjustment criteria need directed edges");
    g.require_node(x);
    g.require_node(y);
    if (x == y) fail(Err::InvalidPath, "treatment and outcome must be distinct");
}

bool backdoor_valid(const MixedGraph& g, char x, char y, const std::vector<char>& z) {
    Mask zm = g.to_mask(z);
    int xi = g.index_of(x);
    if (zm & g.descendants(xi)) return false;
    for (const NodePath& p : backdoor_paths(g, x, y))
        if (!is_path_blocked(g, p, z).blocked) return false;
    return true;
}

bool frontdoor_valid(const MixedGraph& g, char x, char y, const std::vector<char>& z) {
    Mask zm = g.to_mask(z);
    // (1) every directed path from x to y passes through z
    for (const NodePath& p : directed_paths(g, x, y)) {
        Mask interior = 0;
        for (std::size_t i = 1; i + 1 < p.nodes.size(); ++i)
            interior |= mask_bit(g.index_of(p.nodes[i]));
        if ((interior & zm) == 0) return false;
    }
    // (2) no unblocked backdoor path from x to any member of z
    for (char m : z)
        for (const NodePath& p : backdoor_paths(g, x, m))
            if (!is_path_blocked(g, p, {}).blocked) return false;
    // (3) every backdoor path from a member of z to y is blocked by {x}
    std::vector<char> xonly{x};
    for (char m : z)
        for (const NodePath& p : backdoor_paths(g, m, y))
            if (!is_path_blocked(g, p, xonly).blocked) return false;
    return true;
}

bool set_valid(const MixedGraph& g, char x, char y, Criterion c, const std::vector<char>& z) {
    for (char m : z)
        if (m == x || m == y) return false;
    if (c == Criterion::Backdoor) return backdoor_valid(g, x, y, z);
    return frontdoor_valid(g, x, y, z);
}

std::vector<char> candidate_labels(const MixedGraph& g, char x, char y) {
    std::vector<char> out;
    for (char l : g.labels())
        if (l != x && l != y) out.push_back(l);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<char> subset_of(const std::vector<char>& cand, Mask bits) {
    std::vector<char> out;
    for (std::size_t i = 0; i < cand.size(); ++i)
        if (mask_has(bits, static_cast<int>(i))) out.push_back(cand[i]);
    return out;
}

std::vector<std::vector<char>> all_valid_sets(const MixedGraph& g, char x, char y, Criterion c) {
    std::vector<char> cand = candidate_labels(g, x, y);
    std::vector<std::vector<char>> valid;
    for (Mask bits = 0; bits < (Mask{1} << cand.size()); ++bits) {
        std::vector<char> z = subset_of(cand, bits);
        if (set_valid(g, x, y, c, z)) valid.push_back(std::move(z));
    }
    return valid;
}

bool is_subset(const std::vector<char>& a, const std::vector<char>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

bool adjustment_verify(const MixedGraph& g, const AdjustmentQuery& q) {
    check_query(g, q.x, q.y);
    for (char m : q.z) g.require_node(m);
    return set_valid(g, q.x, q.y, q.criterion, q.z);
}

bool adjustment_exists(const MixedGraph& g, char x, char y, Criterion c) {
    check_query(g, x, y);
    return !all_valid_sets(g, x, y, c).empty();
}

std::optional<std::vector<char>> adjustment_find_valid(const MixedGraph& g, char x, char y, Criterion c) {
    check_query(g, x, y);
    std::vector<char> cand = candidate_labels(g, x, y);
    for (Mask bits = 0; bits < (Mask{1} << cand.size()); ++bits) {
        std::vector<char> z = subset_of(cand, bits);
        if (set_valid(g, x, y, c, z)) return z;
    }
    return std::nullopt;
}

std::optional<std::vector<char>> adjustment_find_minimal(const MixedGraph& g, char x, char y, Criterion c) {
    check_query(g, x, y);
    auto valid = all_valid_sets(g, x, y, c);
    if (valid.empty()) return std::nullopt;
    // smallest cardinality, lexicographic tie-break; such a set is
    // automatically inclusion-minimal
    auto best = std::min_element(valid.begin(), valid.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return *best;
}

std::optional<std::vector<char>> adjustment_find_maximal(const MixedGraph& g, char x, char y, Criterion c) {
    check_query(g, x, y);
    auto valid = all_valid_sets(g, x, y, c);
    if (valid.empty()) return std::nullopt;
    auto best = std::min_element(valid.begin(), valid.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    });
    return *best;
}

bool adjustment_is_minimal(const MixedGraph& g, char x, char y, Criterion c, const std::vector<char>& z) {
    AdjustmentQuery q{x, y, z, c};
    if (!adjustment_verify(g, q)) return false;
    std::vector<char> sorted = z;
    std::sort(sorted.begin(), sorted.end());
    for (const auto& v : all_valid_sets(g, x, y, c))
        if (v.size() < sorted.size() && is_subset(v, sorted)) return false;
    return true;
}

bool adjustment_is_maximal(const MixedGraph& g, char x, char y, Criterion c, const std::vector<char>& z) {
    AdjustmentQuery q{x, y, z, c};
    if (!adjustment_verify(g, q)) return false;
    std::vector<char> sorted = z;
    std::sort(sorted.begin(), sorted.end());
    for (const auto& v : all_valid_sets(g, x, y, c))
        if (v.size() > sorted.size() && is_subset(sorted, v)) return false;
    return true;
}

}  // namespace cgbench
