#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cgbench/dsep.hpp"
#include "cgbench/rng.hpp"
#include "cgbench/sampling.hpp"

using namespace cgbench;

namespace {

MixedGraph chain() { return MixedGraph::build(GraphKind::Dag, {'A', 'B', 'C'}, {{'A', 'B'}, {'B', 'C'}}); }

MixedGraph collider() { return MixedGraph::build(GraphKind::Dag, {'A', 'B', 'C'}, {{'A', 'B'}, {'C', 'B'}}); }

MixedGraph conf() {
    return MixedGraph::build(GraphKind::Dag, {'Z', 'X', 'Y'}, {{'Z', 'X'}, {'Z', 'Y'}, {'X', 'Y'}});
}

NodePath abc_via(const MixedGraph& g) {
    NodePath p;
    p.nodes = {'A', 'B', 'C'};
    int a = g.index_of('A'), b = g.index_of('B'), c = g.index_of('C');
    p.steps.push_back(g.has_directed(a, b) ? Step::Forward : Step::Backward);
    p.steps.push_back(g.has_directed(b, c) ? Step::Forward : Step::Backward);
    return p;
}

}  // namespace

TEST_CASE("blocking rules on the canonical three-node graphs") {
    auto verdict = is_path_blocked(chain(), abc_via(chain()), {'B'});
    CHECK(verdict.blocked);
    CHECK(verdict.witness == 'B');
    CHECK(verdict.rule == BlockRule::NonColliderInZ);

    auto closed = is_path_blocked(collider(), abc_via(collider()), {});
    CHECK(closed.blocked);
    CHECK(closed.witness == 'B');
    CHECK(closed.rule == BlockRule::ColliderClosed);

    CHECK_FALSE(is_path_blocked(collider(), abc_via(collider()), {'B'}).blocked);
    CHECK_FALSE(is_path_blocked(chain(), abc_via(chain()), {}).blocked);
}

TEST_CASE("conditioning on a collider descendant opens the path") {
    MixedGraph g = MixedGraph::build(GraphKind::Dag, {'A', 'B', 'C', 'D'},
                                     {{'A', 'B'}, {'C', 'B'}, {'B', 'D'}});
    NodePath p{{'A', 'B', 'C'}, {Step::Forward, Step::Backward}};
    CHECK(is_path_blocked(g, p, {}).blocked);
    CHECK_FALSE(is_path_blocked(g, p, {'D'}).blocked);
}

TEST_CASE("blocking endpoint and path validation") {
    CHECK_THROWS_AS(is_path_blocked(chain(), abc_via(chain()), {'A'}), Error);
    NodePath bogus{{'A', 'C'}, {Step::Forward}};
    CHECK_THROWS_AS(is_path_blocked(chain(), bogus, {}), Error);
}

TEST_CASE("blocking set construction") {
    CHECK(blocking_set_minimal(chain(), abc_via(chain())) == std::vector<char>{'B'});
    CHECK(blocking_set_valid(collider(), abc_via(collider())).empty());
    NodePath xzy{{'X', 'Z', 'Y'}, {Step::Backward, Step::Forward}};
    CHECK(blocking_set_valid(conf(), xzy) == std::vector<char>{'Z'});
    NodePath single{{'A', 'B'}, {Step::Forward}};
    CHECK_THROWS_AS(blocking_set_valid(chain(), single), Error);
}

TEST_CASE("d-separation on canonical cases") {
    CHECK(d_separated(chain(), 'A', 'C', {'B'}));
    CHECK_FALSE(d_separated(chain(), 'A', 'C', {}));
    CHECK_FALSE(d_separator_valid(conf(), 'X', 'Y').has_value());

    MixedGraph gd = MixedGraph::build(GraphKind::Dag, {'A', 'B', 'C', 'D'},
                                      {{'A', 'B'}, {'C', 'B'}, {'C', 'D'}});
    CHECK(d_separated(gd, 'A', 'D', {}));
    CHECK_FALSE(d_separated(gd, 'A', 'D', {'B'}));
    auto least = d_separator_minimal(gd, 'A', 'D');
    REQUIRE(least.has_value());
    CHECK(least->empty());
}

TEST_CASE("separator helpers agree with the separation predicate") {
    Rng rng(411);
    int separable = 0;
    for (int trial = 0; trial < 200; ++trial) {
        GraphSpec spec;
        spec.kind = trial % 2 ? GraphKind::Admg : GraphKind::Dag;
        spec.n_nodes = 4 + static_cast<int>(rng.below(5));
        int pairs = spec.n_nodes * (spec.n_nodes - 1) / 2;
        int hi = std::min(10, pairs);
        spec.n_edges = spec.n_nodes - 1 + static_cast<int>(rng.below(hi - spec.n_nodes + 2));
        if (spec.kind == GraphKind::Admg)
            spec.n_bidirected = static_cast<int>(rng.below(spec.n_edges / 3 + 1));
        MixedGraph g = sample_graph(spec, rng);
        char x = g.label(static_cast<int>(rng.below(g.n())));
        char y = x;
        while (y == x) y = g.label(static_cast<int>(rng.below(g.n())));
        auto z = d_separator_valid(g, x, y);
        if (!z) continue;
        ++separable;
        CHECK(d_separated(g, x, y, *z));
        auto least = d_separator_minimal(g, x, y);
        REQUIRE(least.has_value());
        CHECK(d_separated(g, x, y, *least));
        CHECK(least->size() <= z->size());
    }
    CHECK(separable > 20);
}

TEST_CASE("non-adjacent pairs in a dag are always separable") {
    Rng rng(902);
    for (int trial = 0; trial < 100; ++trial) {
        GraphSpec spec;
        spec.n_nodes = 5 + static_cast<int>(rng.below(4));
        spec.n_edges = spec.n_nodes + static_cast<int>(rng.below(3));
        MixedGraph g = sample_graph(spec, rng);
        for (char x : g.labels())
            for (char y : g.labels()) {
                if (x >= y || g.adjacent(g.index_of(x), g.index_of(y))) continue;
                CHECK(d_separator_valid(g, x, y).has_value());
            }
    }
}
