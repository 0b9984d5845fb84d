#include "cgbench/identify.hpp"

#include <bit>
#include <vector>

#include "cgbench/components.hpp"
#include "cgbench/errors.hpp"

namespace cgbench {
namespace {

// ancestors of seed within `within`, never expanding through members of
// `cut` (equivalent to deleting the edges into cut first)
Mask ancestors_cut(const MixedGraph& g, Mask seed, Mask within, Mask cut) {
    Mask out = seed & within;
    std::vector<int> todo;
    for (int v = 0; v < g.n(); ++v)
        if (mask_has(out, v)) todo.push_back(v);
    while (!todo.empty()) {
        int v = todo.back();
        todo.pop_back();
        if (mask_has(cut, v)) continue;
        Mask fresh = (g.parents(v) & within) & ~out;
        out |= fresh;
        while (fresh) {
            int p = std::countr_zero(fresh);
            fresh &= fresh - 1;
            todo.push_back(p);
        }
    }
    return out;
}

bool id(const MixedGraph& g, Mask y, Mask x, Mask sub) {
    if (x == 0) return true;
    Mask anc = ancestors_cut(g, y, sub, 0);
    if (anc != sub) return id(g, y, x & anc, anc);
    Mask reach = ancestors_cut(g, y, sub, x);
    Mask w = (sub & ~x) & ~reach;
    if (w) return id(g, y, x | w, sub);
    Mask rest = sub & ~x;
    auto comps = c_component_masks(g, rest);
    if (comps.size() > 1) {
        for (Mask s : comps)
            if (!id(g, s, sub & ~s, sub)) return false;
        return true;
    }
    Mask s = rest;
    auto whole = c_component_masks(g, sub);
    if (whole.size() == 1) return false;  // sub is one c-component: a hedge
    for (Mask c : whole) {
        if (c == s) return true;
        if ((s & ~c) == 0) return id(g, y, x & c, c);
    }
    return false;  // unreachable: s always lies inside some component of sub
}

}  // namespace

bool effect_identifiable(const MixedGraph& g, char x, char y) {
    if (g.kind() != GraphKind::Dag && g.kind() != GraphKind::Admg)
        fail(Err::WrongGraphKind, "identification needs an acyclic directed graph");
    g.require_node(x);
    g.require_node(y);
    if (x == y) fail(Err::InvalidPath, "treatment and outcome must be distinct");
    Mask xm = mask_bit(g.index_of(x));
    Mask ym = mask_bit(g.index_of(y));
    return id(g, ym, xm, g.all_mask());
}

}  // namespace cgbench
