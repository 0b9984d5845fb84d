#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "cgbench/basic_ops.hpp"

using namespace cgbench;

namespace {

MixedGraph chain() { return MixedGraph::build(GraphKind::Dag, {'A', 'B', 'C'}, {{'A', 'B'}, {'B', 'C'}}); }

MixedGraph conf() {
    return MixedGraph::build(GraphKind::Dag, {'Z', 'X', 'Y'}, {{'Z', 'X'}, {'Z', 'Y'}, {'X', 'Y'}});
}

MixedGraph collider() { return MixedGraph::build(GraphKind::Dag, {'A', 'B', 'C'}, {{'A', 'B'}, {'C', 'B'}}); }

}  // namespace

TEST_CASE("node and edge listings") {
    MixedGraph g = chain();
    CHECK(count_nodes(g) == 3);
    CHECK(count_edges(g) == 2);
    CHECK(has_node_query(g, 'B'));
    CHECK_FALSE(has_node_query(g, 'Q'));
    CHECK(has_edge_query(g, "A->B"));
    CHECK(has_edge_query(g, "B <- A"));
    CHECK_FALSE(has_edge_query(g, "A->C"));
    CHECK_FALSE(has_edge_query(g, "A->Q"));
    CHECK_FALSE(has_edge_query(g, "banana"));

    auto edges = list_edges(MixedGraph::build(GraphKind::Admg, {'X', 'M', 'Y'},
                                              {{'X', 'M'}, {'M', 'Y'}}, {{'X', 'Y'}}));
    std::sort(edges.begin(), edges.end());
    CHECK(edges == std::vector<std::string>{"M->Y", "X->M", "X<->Y"});
}

TEST_CASE("relatives") {
    MixedGraph g = conf();
    CHECK(relatives(g, 'Z', Relation::Descendants) == std::vector<char>{'X', 'Y'});
    CHECK(relatives(g, 'Y', Relation::Parents) == std::vector<char>{'X', 'Z'});
    CHECK_THROWS_AS(relatives(g, 'A', Relation::Parents), Error);

    MixedGraph c = chain();
    CHECK(relatives(c, 'C', Relation::Ancestors) == std::vector<char>{'A', 'B'});
    CHECK(relatives(c, 'A', Relation::Parents).empty());
}

TEST_CASE("triple enumeration and classification") {
    CHECK(enumerate_triples(chain(), TripleKind::Chain) == std::vector<Triple>{{'A', 'B', 'C'}});
    CHECK(enumerate_triples(chain(), TripleKind::Fork).empty());
    CHECK(enumerate_triples(collider(), TripleKind::VStructure) ==
          std::vector<Triple>{{'A', 'B', 'C'}});
    CHECK(enumerate_triples(conf(), TripleKind::Fork) == std::vector<Triple>{{'X', 'Z', 'Y'}});
    // the Z->X->Y chain and X<-Z->Y fork exist; the collider at Y is shielded
    CHECK(enumerate_triples(conf(), TripleKind::VStructure).empty());

    CHECK(classify_triple(collider(), 'A', 'B', 'C') == TripleKind::VStructure);
    CHECK(classify_triple(chain(), 'A', 'B', 'C') == TripleKind::Chain);
    CHECK(classify_triple(conf(), 'X', 'Z', 'Y') == TripleKind::Fork);
    CHECK_FALSE(classify_triple(conf(), 'X', 'Y', 'Z').has_value());
}

TEST_CASE("orientation-blind path enumeration") {
    MixedGraph g = conf();
    CHECK(count_paths(g, 'X', 'Y') == 2);
    auto all = all_paths(g, 'X', 'Y');
    REQUIRE(all.size() == 2);
    CHECK(all[0].text() == "X -> Y");
    CHECK(all[1].text() == "X <- Z -> Y");

    MixedGraph c = chain();
    CHECK(shortest_path(c, 'A', 'C').nodes == std::vector<char>{'A', 'B', 'C'});
    auto rev = all_paths(c, 'C', 'A');
    REQUIRE(rev.size() == 1);
    CHECK(rev[0].nodes == std::vector<char>{'C', 'B', 'A'});
    CHECK(rev[0].text() == "C <- B <- A");

    CHECK_THROWS_AS(one_path(MixedGraph::build(GraphKind::Dag, {'A', 'B', 'C'}, {{'A', 'B'}}),
                             'A', 'C'),
                    Error);
}

TEST_CASE("verify_path checks adjacency and distinctness") {
    MixedGraph g = chain();
    NodePath p{{'A', 'B', 'C'}, {Step::Forward, Step::Forward}};
    CHECK(verify_path(g, p));
    NodePath wrong{{'A', 'C'}, {Step::Forward}};
    CHECK_FALSE(verify_path(g, wrong));
    NodePath repeat{{'A', 'B', 'A'}, {Step::Forward, Step::Backward}};
    CHECK_FALSE(verify_path(g, repeat));
}

TEST_CASE("cycles") {
    MixedGraph cyc = MixedGraph::build(GraphKind::Directed, {'A', 'B', 'C'},
                                       {{'A', 'B'}, {'B', 'C'}, {'C', 'A'}});
    CHECK(cycle_exists(cyc));
    CHECK_FALSE(cycle_exists(chain()));
    auto found = find_cycle(cyc);
    REQUIRE(found.size() == 4);
    CHECK(found.front() == found.back());
    CHECK(verify_cycle(cyc, {'A', 'B', 'C', 'A'}));
    CHECK(verify_cycle(cyc, {'A', 'B', 'C'}));
    CHECK(verify_cycle(cyc, {'B', 'C', 'A'}));
    CHECK_FALSE(verify_cycle(cyc, {'A', 'C', 'B'}));
    CHECK_THROWS_AS(find_cycle(chain()), Error);
}

TEST_CASE("topological order") {
    CHECK(topological_order(chain()) == std::vector<char>{'A', 'B', 'C'});
    CHECK(verify_topological(chain(), {'A', 'B', 'C'}));
    CHECK_FALSE(verify_topological(chain(), {'B', 'A', 'C'}));
    CHECK(verify_topological(conf(), {'Z', 'X', 'Y'}));
    CHECK_FALSE(verify_topological(chain(), {'A', 'B'}));  // must place every node
    MixedGraph cyc = MixedGraph::build(GraphKind::Directed, {'A', 'B'}, {{'A', 'B'}, {'B', 'A'}});
    CHECK_THROWS_AS(topological_order(cyc), Error);
}
