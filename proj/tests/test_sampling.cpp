#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "cgbench/sampling.hpp"

using namespace cgbench;

namespace {

// connectivity of the pooled skeleton by union-find over labels
bool skeleton_connected(const MixedGraph& g) {
    std::vector<int> parent(static_cast<std::size_t>(g.n()));
    for (int i = 0; i < g.n(); ++i) parent[static_cast<std::size_t>(i)] = i;
    auto find = [&](int v) {
        while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)];
        return v;
    };
    auto unite = [&](int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); };
    for (auto [u, v] : g.directed()) unite(u, v);
    for (auto [u, v] : g.bidirected()) unite(u, v);
    for (auto [u, v] : g.undirected()) unite(u, v);
    for (int i = 1; i < g.n(); ++i)
        if (find(i) != find(0)) return false;
    return true;
}

}  // namespace

TEST_CASE("same seed reproduces the same graph") {
    GraphSpec spec;
    spec.n_nodes = 7;
    spec.n_edges = 9;
    MixedGraph a = sample_graph(spec, 12345);
    MixedGraph b = sample_graph(spec, 12345);
    CHECK(a.text_form() == b.text_form());
    MixedGraph c = sample_graph(spec, 12346);
    CHECK(a.text_form() != c.text_form());
}

TEST_CASE("sampled graphs satisfy the requested spec") {
    Rng rng(77);
    for (int trial = 0; trial < 300; ++trial) {
        GraphSpec spec;
        int pick = trial % 4;
        spec.kind = pick == 0   ? GraphKind::Undirected
                    : pick == 1 ? GraphKind::Directed
                    : pick == 2 ? GraphKind::Dag
                                : GraphKind::Admg;
        spec.n_nodes = 4 + static_cast<int>(rng.below(6));
        int pairs = spec.n_nodes * (spec.n_nodes - 1) / 2;
        int hi = std::min(10, pairs);
        spec.n_edges = spec.n_nodes - 1 + static_cast<int>(rng.below(hi - spec.n_nodes + 2));
        if (spec.kind == GraphKind::Admg)
            spec.n_bidirected = static_cast<int>(rng.below(spec.n_edges / 3 + 1));

        MixedGraph g = sample_graph(spec, rng);
        CHECK(g.kind() == spec.kind);
        CHECK(g.n() == spec.n_nodes);
        CHECK(g.edge_count() == spec.n_edges);
        CHECK(skeleton_connected(g));
        if (spec.kind == GraphKind::Undirected) {
            CHECK(g.directed().empty());
            CHECK(static_cast<int>(g.undirected().size()) == spec.n_edges);
        }
        if (spec.kind == GraphKind::Dag || spec.kind == GraphKind::Admg)
            CHECK(g.directed_part_acyclic());
        if (spec.kind == GraphKind::Admg) {
            CHECK(static_cast<int>(g.bidirected().size()) == spec.n_bidirected);
            CHECK(2 * spec.n_bidirected <= static_cast<int>(g.directed().size()));
        } else {
            CHECK(g.bidirected().empty());
        }
        std::set<char> labels(g.labels().begin(), g.labels().end());
        CHECK(static_cast<int>(labels.size()) == spec.n_nodes);
    }
}

TEST_CASE("infeasible specs are rejected") {
    GraphSpec too_many;
    too_many.n_nodes = 4;
    too_many.n_edges = 7;  // above the 6 distinct pairs a 4-node dag holds
    CHECK_THROWS_AS(sample_graph(too_many, 1), Error);

    GraphSpec too_few;
    too_few.n_nodes = 5;
    too_few.n_edges = 3;  // cannot connect five nodes with three edges
    CHECK_THROWS_AS(sample_graph(too_few, 1), Error);

    GraphSpec ratio;
    ratio.kind = GraphKind::Admg;
    ratio.n_nodes = 4;
    ratio.n_edges = 4;
    ratio.n_bidirected = 3;  // 3:1 against a 0.5 cap
    CHECK_THROWS_AS(sample_graph(ratio, 1), Error);

    GraphSpec none;
    none.n_nodes = 0;
    none.n_edges = 0;
    CHECK_THROWS_AS(sample_graph(none, 1), Error);
}
