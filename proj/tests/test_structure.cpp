#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "m22/canonical.hpp"
#include "m22/construction.hpp"
#include "m22/moves.hpp"
#include "m22/pebble.hpp"
#include "m22/structure.hpp"
#include "test_util.hpp"

using namespace m22;
using namespace testutil;

namespace {

Graph from_form(const CanonicalForm& cf) { return Graph::from_edges(cf.edges); }

}  // namespace

TEST_CASE("cutpairs of K4edgeK4 are exactly the shared edge") {
    auto pairs = cutpairs(k4_edge_k4());
    REQUIRE(pairs.size() == 1);
    CHECK(pairs[0].a == 0);
    CHECK(pairs[0].b == 1);
    CHECK(pairs[0].ab_present);
    CHECK(pairs[0].components.size() == 2);
}

TEST_CASE("K5-e has no cutpairs and is 3-connected") {
    CHECK(cutpairs(k5e()).empty());
    CHECK(is_3_connected(k5e()));
}

TEST_CASE("K4vertexK4 cutpairs contain the shared vertex") {
    auto pairs = cutpairs(k4_vertex_k4());
    CHECK(!pairs.empty());
    for (const auto& cp : pairs) CHECK((cp.a == 0 || cp.b == 0));
    CHECK(!is_3_connected(k4_vertex_k4()));
}

TEST_CASE("cutpairs preconditions") {
    Graph disconnected({0, 1, 2, 3, 4, 5},
                       {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    CHECK_THROWS_AS(cutpairs(disconnected), PreconditionError);
    CHECK_THROWS_AS(cutpairs(complete(3)), PreconditionError);
}

TEST_CASE("two-connectivity") {
    CHECK(is_2_connected(k5e()));
    CHECK(is_2_connected(k4_edge_k4()));
    CHECK(!is_2_connected(glued_k5e_pair(false)));
    CHECK(is_2_connected(glued_k5e_pair(true)));
    Graph path({0, 1, 2}, {{0, 1}, {1, 2}});
    CHECK(!is_2_connected(path));
}

TEST_CASE("edge connectivity") {
    CHECK(edge_connectivity(k5e()) == 3);
    CHECK(edge_connectivity(complete(4)) == 3);
    CHECK(edge_connectivity(complete(5)) == 4);
    CHECK(edge_connectivity(k36()) == 3);
    Graph bridge({0, 1, 2, 3}, {{0, 1}, {1, 2}, {2, 0}, {2, 3}});
    CHECK(edge_connectivity(bridge) == 1);
    Graph disconnected({0, 1, 2}, {{0, 1}});
    CHECK(edge_connectivity(disconnected) == 0);
    MultiGraph triple({0, 1}, {{0, 1, 3}});
    CHECK(edge_connectivity(triple) == 3);
}

TEST_CASE("every circuit is 2-connected and 3-edge-connected") {
    for (int n = 5; n <= 7; ++n)
        for (const auto& cf : enumerate_circuits(n)) {
            Graph g = from_form(cf);
            CHECK(is_2_connected(g));
            CHECK(edge_connectivity(g) >= 3);
        }
}

TEST_CASE("critical sets of circuits induce 2-edge-connected subgraphs") {
    for (int n = 5; n <= 6; ++n)
        for (const auto& cf : enumerate_circuits(n)) {
            Graph g = from_form(cf);
            for (const auto& x : brute_critical_sets(g, {}, {})) {
                if (x.size() < 3) continue;
                Graph sub = induced_subgraph(g, x);
                CHECK(edge_connectivity(sub) >= 2);
            }
        }
}

TEST_CASE("three sum of two K5-e copies has the cross edges as a cutset") {
    // vertex 4 of K5-e has neighbors 0,1,2
    Graph g = three_sum(k5e(), 4, k5e(), 4, {{{0, 0}, {1, 1}, {2, 2}}});
    REQUIRE(is_circuit(g));
    auto cuts = nontrivial_3_edge_cutsets(g);
    CHECK(!cuts.empty());
    bool found_cross = false;
    for (const auto& cs : cuts)
        if (cs.side_a.size() == 4 && cs.side_b.size() == 4) found_cross = true;
    CHECK(found_cross);
}

TEST_CASE("K5-e and K_{3,6} have no nontrivial 3-edge cutsets") {
    CHECK(nontrivial_3_edge_cutsets(k5e()).empty());
    CHECK(nontrivial_3_edge_cutsets(k36()).empty());
}

TEST_CASE("nontrivial cutset scan requires 3-edge-connected input") {
    Graph bridge({0, 1, 2, 3}, {{0, 1}, {1, 2}, {2, 0}, {2, 3}});
    CHECK_THROWS_AS(nontrivial_3_edge_cutsets(bridge), PreconditionError);
}

TEST_CASE("cutset edges of 3-connected circuits are vertex-disjoint") {
    for (int n = 6; n <= 8; ++n)
        for (const auto& cf : enumerate_circuits(n)) {
            Graph g = from_form(cf);
            if (!is_3_connected(g)) continue;
            for (const auto& cs : nontrivial_3_edge_cutsets(g)) {
                std::set<VertexId> ends;
                for (const auto& [x, y] : cs.edges) {
                    ends.insert(x);
                    ends.insert(y);
                }
                CHECK(ends.size() == 6);
            }
        }
}

TEST_CASE("node census of K5-e") {
    auto nc = node_census(k5e());
    CHECK(nc.nodes == std::vector<VertexId>{3, 4});
    CHECK(nc.starred.empty());  // both degree-3 vertices sit in K4s
}

TEST_CASE("node census of K4edgeK4") {
    auto nc = node_census(k4_edge_k4());
    CHECK(nc.nodes == std::vector<VertexId>{2, 3, 4, 5});
    CHECK(nc.starred.empty());
}

TEST_CASE("starred nodes induce a forest on 3-connected circuits without cutsets") {
    for (int n = 6; n <= 8; ++n)
        for (const auto& cf : enumerate_circuits(n)) {
            Graph g = from_form(cf);
            if (!is_3_connected(g) || !nontrivial_3_edge_cutsets(g).empty()) continue;
            auto nc = node_census(g);
            CHECK(nc.starred.size() >= 2);
            Graph sub = induced_subgraph(g, nc.starred);
            // forest: |E| = |V| - #components
            int comps = static_cast<int>(connected_components(sub).size());
            CHECK(sub.edge_count() == sub.vertex_count() - comps);
        }
}

TEST_CASE("hanging K4 detection") {
    auto h1 = hanging_k4_cutpairs(k4_edge_k4());
    CHECK(h1.size() == 2);  // both sides of the shared edge
    for (const auto& h : h1) {
        CHECK(h.pair.a == 0);
        CHECK(h.pair.b == 1);
    }
    CHECK(hanging_k4_cutpairs(k5e()).empty());
    auto h2 = hanging_k4_cutpairs(k4_vertex_k4());
    CHECK(h2.size() == 2);
}

TEST_CASE("every cutpair of a 2-sum of K4edgeK4s is hanging") {
    Graph g = two_sum(k4_edge_k4(), {0, 1, 2, 3}, k4_edge_k4(), {0, 1, 2, 3});
    REQUIRE(is_circuit(g));
    auto pairs = cutpairs(g);
    auto hang = hanging_k4_cutpairs(g);
    REQUIRE(!pairs.empty());
    for (const auto& cp : pairs) {
        bool covered = false;
        for (const auto& h : hang)
            if (h.pair.a == cp.a && h.pair.b == cp.b) covered = true;
        CHECK(covered);
    }
}

TEST_CASE("contraction of K4edgeK4 is the triple edge") {
    MultiGraph m = contract_hanging_k4s(k4_edge_k4());
    CHECK(m.vertex_count() == 2);
    CHECK(m.edge_count() == 3);
    CHECK(m.multiplicity(0, 1) == 3);
    CHECK(is_multicircuit(m));
}

TEST_CASE("contraction of K4vertexK4 is the five-edge multigraph on three vertices") {
    MultiGraph m = contract_hanging_k4s(k4_vertex_k4());
    CHECK(m.vertex_count() == 3);
    CHECK(m.edge_count() == 5);
    CHECK(is_multicircuit(m));
}

TEST_CASE("contraction leaves circuits without hanging K4s unchanged") {
    MultiGraph m = contract_hanging_k4s(k5e());
    CHECK(m.simple() == k5e());
    CHECK(m.edge_count() == 9);
}

TEST_CASE("contraction rejects non-hanging cutpairs") {
    // a 1-sum output has a cutpair with ab absent
    Graph g = one_sum(k5e(), {0, 1}, k4_edge_k4(), {0, 1, 2, 3});
    REQUIRE(is_circuit(g));
    CHECK_THROWS_AS(contract_hanging_k4s(g), PreconditionError);
}

TEST_CASE("contraction of a grown chain keeps one doubled edge") {
    // K4edgeK4 with the far edge split, so one K4 stays hanging
    Graph g = henneberg2(k4_edge_k4(), {4, 5}, 0, 6);
    REQUIRE(is_circuit(g));
    REQUIRE(hanging_k4_cutpairs(g).size() == 1);
    MultiGraph m = contract_hanging_k4s(g);
    CHECK(m.vertex_count() == 5);
    CHECK(m.multiplicity(0, 1) == 2);
    CHECK(is_multicircuit(m));
    for (VertexId v : m.vertices())
        if (m.degree(v) == 3) CHECK(m.neighbors(v).size() == 3);
}
