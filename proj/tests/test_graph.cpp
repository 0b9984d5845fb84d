#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cgbench/graph.hpp"
#include "cgbench/question.hpp"

using namespace cgbench;

namespace {

MixedGraph chain() { return MixedGraph::build(GraphKind::Dag, {'A', 'B', 'C'}, {{'A', 'B'}, {'B', 'C'}}); }

MixedGraph frontdoor() {
    return MixedGraph::build(GraphKind::Admg, {'X', 'M', 'Y'}, {{'X', 'M'}, {'M', 'Y'}},
                             {{'X', 'Y'}});
}

}  // namespace

TEST_CASE("chain graph basics") {
    MixedGraph g = chain();
    CHECK(g.n() == 3);
    CHECK(g.kind() == GraphKind::Dag);
    CHECK(g.has_directed(g.index_of('A'), g.index_of('B')));
    CHECK_FALSE(g.has_directed(g.index_of('A'), g.index_of('C')));
    CHECK_FALSE(g.has_directed(g.index_of('B'), g.index_of('A')));
    CHECK(g.edge_count() == 2);
}

TEST_CASE("frontdoor graph stores both edge categories") {
    MixedGraph g = frontdoor();
    CHECK(g.edge_count() == 3);
    CHECK(g.has_directed(g.index_of('X'), g.index_of('M')));
    CHECK(g.has_directed(g.index_of('M'), g.index_of('Y')));
    CHECK(g.has_bidirected(g.index_of('X'), g.index_of('Y')));
    CHECK(g.has_bidirected(g.index_of('Y'), g.index_of('X')));
    CHECK_FALSE(g.has_bidirected(g.index_of('X'), g.index_of('M')));
}

TEST_CASE("ancestors and descendants are irreflexive closures") {
    MixedGraph g = chain();
    Mask anc = g.ancestors(g.index_of('C'));
    CHECK(mask_has(anc, g.index_of('A')));
    CHECK(mask_has(anc, g.index_of('B')));
    CHECK_FALSE(mask_has(anc, g.index_of('C')));
    CHECK(g.parents(g.index_of('A')) == 0);

    MixedGraph conf = MixedGraph::build(GraphKind::Dag, {'Z', 'X', 'Y'},
                                        {{'Z', 'X'}, {'Z', 'Y'}, {'X', 'Y'}});
    Mask des = conf.descendants(conf.index_of('Z'));
    CHECK(conf.to_labels(des) == std::vector<char>{'X', 'Y'});
}

TEST_CASE("build rejects malformed input") {
    CHECK_THROWS_AS(MixedGraph::build(GraphKind::Dag, {'A'}, {{'A', 'A'}}), Error);
    CHECK_THROWS_AS(MixedGraph::build(GraphKind::Dag, {'A', 'B'}, {{'A', 'B'}, {'A', 'B'}}),
                    Error);
    CHECK_THROWS_AS(MixedGraph::build(GraphKind::Dag, {'A', 'B'}, {{'A', 'B'}, {'B', 'A'}}),
                    Error);
    CHECK_THROWS_AS(MixedGraph::build(GraphKind::Dag, {'A', 'B'}, {{'A', 'C'}}), Error);
    CHECK_THROWS_AS(MixedGraph::build(GraphKind::Dag, {'A', 'B'}, {}, {{'A', 'B'}}), Error);
    CHECK_THROWS_AS(MixedGraph::build(GraphKind::Undirected, {'A', 'B'}, {{'A', 'B'}}), Error);

    try {
        MixedGraph::build(GraphKind::Dag, {'A', 'B', 'C'}, {{'A', 'B'}, {'B', 'C'}, {'C', 'A'}});
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Err::CycleInDag);
    }
}

TEST_CASE("directed kind allows cycles that the dag kind rejects") {
    MixedGraph g = MixedGraph::build(GraphKind::Directed, {'A', 'B', 'C'},
                                     {{'A', 'B'}, {'B', 'C'}, {'C', 'A'}});
    CHECK_FALSE(g.directed_part_acyclic());
}

TEST_CASE("text form round-trips through the parser") {
    MixedGraph g = frontdoor();
    std::string text = g.text_form();
    CHECK(text.find("nodes: ") == 0);
    CHECK(text.find("directed edges: ") != std::string::npos);
    CHECK(text.find("bi-directed edges: ") != std::string::npos);
    MixedGraph back = parse_graph_text(GraphKind::Admg, text);
    CHECK(back.text_form() == text);

    MixedGraph u = MixedGraph::build(GraphKind::Undirected, {'A', 'B'}, {}, {}, {{'A', 'B'}});
    CHECK(parse_graph_text(GraphKind::Undirected, u.text_form()).text_form() == u.text_form());

    CHECK_THROWS_AS(parse_graph_text(GraphKind::Dag, "directed edges: A->B"), Error);
}

TEST_CASE("json form round-trips") {
    MixedGraph g = frontdoor();
    Json j = graph_to_json(g);
    CHECK(j.at("kind") == "admg");
    MixedGraph back = graph_from_json(j);
    CHECK(back.text_form() == g.text_form());
    CHECK(graph_to_json(back) == j);
}

TEST_CASE("mask helpers") {
    MixedGraph g = chain();
    CHECK(g.all_mask() == 0b111u);
    CHECK(g.to_mask({'A', 'C'}) == (mask_bit(g.index_of('A')) | mask_bit(g.index_of('C'))));
    CHECK_THROWS_AS(g.to_mask({'Q'}), Error);
    std::vector<char> round = g.to_labels(g.to_mask({'C', 'A'}));
    CHECK(round == std::vector<char>{'A', 'C'});
}
