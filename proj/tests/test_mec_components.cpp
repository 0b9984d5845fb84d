#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "cgbench/components.hpp"
#include "cgbench/mec.hpp"

using namespace cgbench;

namespace {

MixedGraph chain() { return MixedGraph::build(GraphKind::Dag, {'A', 'B', 'C'}, {{'A', 'B'}, {'B', 'C'}}); }

MixedGraph collider() { return MixedGraph::build(GraphKind::Dag, {'A', 'B', 'C'}, {{'A', 'B'}, {'C', 'B'}}); }

MixedGraph conf() {
    return MixedGraph::build(GraphKind::Dag, {'Z', 'X', 'Y'}, {{'Z', 'X'}, {'Z', 'Y'}, {'X', 'Y'}});
}

MixedGraph frontdoor() {
    return MixedGraph::build(GraphKind::Admg, {'X', 'M', 'Y'}, {{'X', 'M'}, {'M', 'Y'}},
                             {{'X', 'Y'}});
}

}  // namespace

TEST_CASE("markov equivalence via skeleton and v-structures") {
    MixedGraph reversed = MixedGraph::build(GraphKind::Dag, {'A', 'B', 'C'},
                                            {{'C', 'B'}, {'B', 'A'}});
    CHECK(markov_equivalent(chain(), reversed));
    CHECK_FALSE(markov_equivalent(chain(), collider()));
    CHECK(markov_equivalent(collider(), collider()));

    MixedGraph other_nodes = MixedGraph::build(GraphKind::Dag, {'A', 'B', 'D'}, {{'A', 'B'}});
    CHECK_THROWS_AS(markov_equivalent(chain(), other_nodes), Error);
    CHECK_THROWS_AS(markov_equivalent(chain(), frontdoor()), Error);
}

TEST_CASE("equivalence class members") {
    // a v-structure admits no other orientation of its skeleton
    CHECK_FALSE(mec_other_member(collider()).has_value());

    auto other = mec_other_member(chain());
    REQUIRE(other.has_value());
    CHECK(markov_equivalent(chain(), *other));
    CHECK(other->text_form() != chain().text_form());
}

TEST_CASE("markov blanket") {
    CHECK(markov_blanket(conf(), 'Z') == std::vector<char>{'X', 'Y'});
    CHECK(markov_blanket(conf(), 'X') == std::vector<char>{'Y', 'Z'});
    MixedGraph iso = MixedGraph::build(GraphKind::Dag, {'A', 'B', 'C'}, {{'A', 'B'}});
    CHECK(markov_blanket(iso, 'C').empty());
}

TEST_CASE("c-component partition") {
    auto parts = c_component_partition(frontdoor());
    REQUIRE(parts.size() == 2);
    CHECK(parts[0] == std::vector<char>{'M'});
    CHECK(parts[1] == std::vector<char>{'X', 'Y'});
    CHECK(c_component_count(frontdoor()) == 2);
    CHECK_FALSE(is_c_component(frontdoor()));

    MixedGraph cc = MixedGraph::build(GraphKind::Admg, {'A', 'B', 'C'}, {{'A', 'C'}},
                                      {{'A', 'B'}, {'B', 'C'}});
    CHECK(is_c_component(cc));
    CHECK(c_component_count(cc) == 1);
}

TEST_CASE("c-trees and c-forests") {
    MixedGraph bow = MixedGraph::build(GraphKind::Admg, {'X', 'Y'}, {{'X', 'Y'}}, {{'X', 'Y'}});
    CHECK(is_c_tree(bow));
    CHECK(is_c_forest(bow));

    CHECK_FALSE(is_c_forest(frontdoor()));
    CHECK_FALSE(is_c_tree(frontdoor()));

    // both nodes childless: a c-forest with a two-node root set, not a tree
    MixedGraph pair = MixedGraph::build(GraphKind::Admg, {'X', 'Y'}, {}, {{'X', 'Y'}});
    CHECK(is_c_forest(pair));
    CHECK_FALSE(is_c_tree(pair));

    // a node with two children violates the out-degree bound
    MixedGraph wide = MixedGraph::build(GraphKind::Admg, {'A', 'B', 'C'},
                                        {{'A', 'B'}, {'A', 'C'}},
                                        {{'A', 'B'}, {'B', 'C'}});
    CHECK_FALSE(is_c_forest(wide));
}

TEST_CASE("maximal root set") {
    CHECK(maximal_root_set(conf()) == std::vector<char>{'Y'});
    MixedGraph two = MixedGraph::build(GraphKind::Dag, {'A', 'B', 'C'}, {{'A', 'B'}, {'A', 'C'}});
    CHECK(maximal_root_set(two) == std::vector<char>{'B', 'C'});
    CHECK(maximal_root_set_count(two) == 2);
    CHECK(verify_maximal_root_set(two, {'B', 'C'}));
    CHECK_FALSE(verify_maximal_root_set(conf(), {'X', 'Y'}));
    CHECK_FALSE(verify_maximal_root_set(two, {'B'}));
}
