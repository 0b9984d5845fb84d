#include "cgbench/components.hpp"

#include <algorithm>
#include <bit>

namespace cgbench {

namespace {

void require_admg(const MixedGraph& g) {
    if (g.kind() != GraphKind::Admg)
        fail(Err::WrongGraphKind, "c-component queries need an ADMG");
}

void require_directed_part(const MixedGraph& g) {
    if (g.kind() == GraphKind::Undirected)
        fail(Err::WrongGraphKind, "root set queries need a directed part");
}

}  // namespace

std::vector<Mask> c_component_masks(const MixedGraph& g, Mask within) {
    std::vector<Mask> blocks;
    Mask left = within;
    while (left) {
        int s = std::countr_zero(left);
        Mask block = mask_bit(s), frontier = block;
        while (frontier) {
            Mask next = 0;
            for (int v = 0; v < g.n(); ++v)
                if (mask_has(frontier, v)) next |= g.siblings(v) & within;
            frontier = next & ~block;
            block |= next;
        }
        blocks.push_back(block);
        left &= ~block;
    }
    return blocks;
}

std::vector<std::vector<char>> c_component_partition(const MixedGraph& g) {
    require_admg(g);
    std::vector<std::vector<char>> out;
    for (Mask block : c_component_masks(g, g.all_mask())) out.push_back(g.to_labels(block));
    std::sort(out.begin(), out.end());
    return out;
}

int c_component_count(const MixedGraph& g) {
    require_admg(g);
    return static_cast<int>(c_component_masks(g, g.all_mask()).size());
}

bool is_c_component(const MixedGraph& g) {
    require_admg(g);
    return c_component_masks(g, g.all_mask()).size() == 1;
}

bool is_c_forest(const MixedGraph& g) {
    require_admg(g);
    if (c_component_masks(g, g.all_mask()).size() != 1) return false;
    for (int v = 0; v < g.n(); ++v)
        if (std::popcount(g.children(v)) > 1) return false;
    return true;
}

bool is_c_tree(const MixedGraph& g) {
    return is_c_forest(g) && maximal_root_set_count(g) == 1;
}

std::vector<char> maximal_root_set(const MixedGraph& g) {
    require_directed_part(g);
    Mask roots = 0;
    for (int v = 0; v < g.n(); ++v)
        if (g.children(v) == 0) roots |= mask_bit(v);
    return g.to_labels(roots);
}

int maximal_root_set_count(const MixedGraph& g) {
    return static_cast<int>(maximal_root_set(g).size());
}

bool verify_maximal_root_set(const MixedGraph& g, const std::vector<char>& s) {
    std::vector<char> sorted = s;
    std::sort(sorted.begin(), sorted.end());
    return sorted == maximal_root_set(g);
}

}  // namespace cgbench
