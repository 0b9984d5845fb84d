#include "cgbench/mec.hpp"

#include <algorithm>

#include "cgbench/basic_ops.hpp"

namespace cgbench {

namespace {

using LabelPair = std::pair<char, char>;

std::vector<LabelPair> skeleton(const MixedGraph& g) {
    std::vector<LabelPair> out;
    for (const auto& [u, v] : g.directed()) {
        char a = g.label(u), b = g.label(v);
        out.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Triple> vstructures(const MixedGraph& g) { return enumerate_triples(g, TripleKind::VStructure); }

void require_dag(const MixedGraph& g) {
    if (g.kind() != GraphKind::Dag) fail(Err::WrongGraphKind, "markov equivalence is defined over DAGs");
}

}  // namespace

bool markov_equivalent(const MixedGraph& a, const MixedGraph& b) {
    require_dag(a);
    require_dag(b);
    std::vector<char> la = a.labels(), lb = b.labels();
    std::sort(la.begin(), la.end());
    std::sort(lb.begin(), lb.end());
    if (la != lb) fail(Err::NodeSetMismatch, "graphs are over different node sets");
    if (skeleton(a) != skeleton(b)) return false;
    auto va = vstructures(a), vb = vstructures(b);
    if (va.size() != vb.size()) return false;
    for (std::size_t i = 0; i < va.size(); ++i)
        if (!(va[i] == vb[i])) return false;
    return true;
}

std::optional<MixedGraph> mec_other_member(const MixedGraph& g) {
    require_dag(g);
    auto skel = skeleton(g);
    std::size_t m = skel.size();

    auto own_edges = [&](const MixedGraph& h) {
        std::vector<LabelPair> out;
        for (const auto& [u, v] : h.directed()) out.emplace_back(h.label(u), h.label(v));
        std::sort(out.begin(), out.end());
        return out;
    };
    std::vector<LabelPair> self = own_edges(g);

    std::optional<std::vector<LabelPair>> best;
    for (std::uint32_t bits = 0; bits < (1u << m); ++bits) {
        std::vector<LabelPair> directed;
        for (std::size_t i = 0; i < m; ++i) {
            auto [a, b] = skel[i];
            if ((bits >> i) & 1u) directed.emplace_back(b, a);
            else directed.emplace_back(a, b);
        }
        std::optional<MixedGraph> cand;
        try {
            cand = MixedGraph::build(GraphKind::Dag, g.labels(), directed);
        } catch (const Error&) {
            continue;  // cyclic orientation of the skeleton
        }
        std::vector<LabelPair> edges = own_edges(*cand);
        if (edges == self) continue;
        if (!markov_equivalent(g, *cand)) continue;
        if (!best || edges < *best) best = edges;
    }
    if (!best) return std::nullopt;
    return MixedGraph::build(GraphKind::Dag, g.labels(), *best);
}

std::vector<char> markov_blanket(const MixedGraph& g, char v) {
    if (g.kind() != GraphKind::Dag) fail(Err::WrongGraphKind, "markov blanket is defined over DAGs");
    int i = g.require_node(v);
    Mask mb = g.parents(i) | g.children(i);
    Mask ch = g.children(i);
    for (int c = 0; c < g.n(); ++c)
        if (mask_has(ch, c)) mb |= g.parents(c);
    mb &= ~mask_bit(i);
    return g.to_labels(mb);
}

}  // namespace cgbench
