#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "m22/canonical.hpp"
#include "m22/construction.hpp"
#include "m22/matroid.hpp"
#include "m22/pebble.hpp"
#include "m22/structure.hpp"
#include "test_util.hpp"

using namespace m22;
using namespace testutil;

TEST_CASE("fundamental circuit of the extra edge of K5-e is everything") {
    Graph g = k5e();
    auto basis = pebble_rank(g).independent_edges;
    REQUIRE(basis.size() == 8);
    Edge extra{-1, -1};
    std::set<Edge> in_basis(basis.begin(), basis.end());
    for (const auto& e : g.edges())
        if (!in_basis.count(e)) extra = e;
    auto circuit = fundamental_circuit(g, basis, extra);
    CHECK(circuit == g.edges());
}

TEST_CASE("fundamental circuit stays inside its block") {
    // two K5-e blocks joined by a bridge path
    Graph g = glued_k5e_pair(false);
    auto basis = pebble_rank(g).independent_edges;
    std::set<Edge> in_basis(basis.begin(), basis.end());
    for (const auto& e : g.edges()) {
        if (in_basis.count(e)) continue;
        auto circuit = fundamental_circuit(g, basis, e);
        // the circuit must sit inside the block of e (vertices < 5 or >= 5 plus 0)
        bool left = e.first < 5 && e.second < 5;
        for (const auto& [u, v] : circuit) {
            if (left) {
                CHECK(u < 5);
                CHECK(v < 5);
            } else {
                CHECK((u == 0 || u >= 5));
                CHECK((v == 0 || v >= 5));
            }
        }
    }
}

TEST_CASE("fundamental circuit preconditions") {
    Graph g = k5e();
    auto basis = pebble_rank(g).independent_edges;
    CHECK_THROWS_AS(fundamental_circuit(g, basis, basis[0]), PreconditionError);
    CHECK_THROWS_AS(fundamental_circuit(g, g.edges(), Edge{3, 4}), PreconditionError);
    Graph t = complete(4);
    auto tb = pebble_rank(t).independent_edges;
    std::vector<Edge> small(tb.begin(), tb.begin() + 4);
    // an edge extending a partial basis independently
    CHECK_THROWS_AS(fundamental_circuit(t, small, tb[4]), PreconditionError);
}

TEST_CASE("a circuit is a single matroid component") {
    auto mc = matroid_components(k5e());
    REQUIRE(mc.partition.size() == 1);
    CHECK(mc.partition[0] == k5e().edges());
    CHECK(mc.bridges.empty());
    CHECK(is_rm_connected(k5e()));
}

TEST_CASE("a pendant edge is a bridge") {
    Graph g = k5e().add_vertex(9).add_edge(0, 9);
    auto mc = matroid_components(g);
    CHECK(mc.bridges == std::vector<Edge>{{0, 9}});
    CHECK(mc.partition.size() == 2);
    CHECK(!is_rm_connected(g));
}

TEST_CASE("tight graphs have only bridges") {
    auto mc = matroid_components(complete(4));
    CHECK(mc.bridges.size() == 6);
    CHECK(!is_rm_connected(complete(4)));
}

TEST_CASE("is_rm_connected requires at least two edges") {
    CHECK_THROWS_AS(is_rm_connected(Graph({0, 1}, {{0, 1}})), PreconditionError);
}

TEST_CASE("glued K5-e pair splits into two classes and is not rm-connected") {
    Graph g = glued_k5e_pair(false);
    auto mc = matroid_components(g);
    CHECK(mc.bridges.empty());
    CHECK(mc.partition.size() == 2);
    CHECK(!is_rm_connected(g));
    CHECK(is_redundantly_rigid(g));  // rigid with every edge in a circuit
    CHECK(!is_2_connected(g));
}

TEST_CASE("the extra cross edge makes the glued pair rm-connected") {
    Graph g = glued_k5e_pair(true);
    CHECK(is_2_connected(g));
    CHECK(is_redundantly_rigid(g));
    CHECK(is_rm_connected(g));
    auto mc = matroid_components(g);
    CHECK(mc.partition.size() == 1);
}

TEST_CASE("matroid components agree with the definitional oracle") {
    std::mt19937_64 rng(401);
    int checked = 0;
    for (int it = 0; it < 200 && checked < 40; ++it) {
        int n = 5 + static_cast<int>(rng() % 2);
        Graph g = random_graph(n, 55 + static_cast<int>(rng() % 35), rng);
        if (g.edge_count() < 2) continue;
        ++checked;
        auto fast = matroid_components(g);
        auto slow = matroid_components(g, /*definitional=*/true);
        CHECK(fast.partition == slow.partition);
        CHECK(fast.bridges == slow.bridges);
    }
    CHECK(checked >= 30);
    CHECK_THROWS_AS(matroid_components(complete(8), true), PreconditionError);
}

TEST_CASE("redundant rigidity") {
    CHECK(is_redundantly_rigid(k5e()));
    CHECK(is_redundantly_rigid(k4_edge_k4()));
    CHECK(!is_redundantly_rigid(complete(4)));  // tight: deleting any edge drops rank
    CHECK(!is_redundantly_rigid(Graph({0, 1, 2}, {{0, 1}, {1, 2}, {0, 2}})));
    CHECK(is_redundantly_rigid(k36()));
}

TEST_CASE("every enumerated circuit is redundantly rigid") {
    for (int n = 5; n <= 7; ++n)
        for (const auto& cf : enumerate_circuits(n))
            CHECK(is_redundantly_rigid(Graph::from_edges(cf.edges)));
}

TEST_CASE("rigid components of a single circuit") {
    auto rc = redundantly_rigid_components(k5e());
    REQUIRE(rc.partition.size() == 1);
    CHECK(rc.partition[0] == k5e().edges());
    CHECK(rc.bridges.empty());
}

TEST_CASE("rigid components of a tight graph are single edges") {
    auto rc = redundantly_rigid_components(complete(4));
    CHECK(rc.partition.size() == 6);
    CHECK(rc.bridges.size() == 6);
}

TEST_CASE("the glued pair forms one maximal redundantly rigid component") {
    // the union of the two blocks is rigid and every edge lies in a circuit,
    // so the maximal redundantly rigid subgraph is the whole graph even
    // though the matroid has two components
    Graph g = glued_k5e_pair(false);
    auto rc = redundantly_rigid_components(g);
    REQUIRE(rc.partition.size() == 1);
    CHECK(rc.partition[0] == g.edges());
    auto mc = matroid_components(g);
    CHECK(mc.partition.size() == 2);
}

TEST_CASE("matroid components refine rigid components") {
    std::mt19937_64 rng(409);
    for (int it = 0; it < 40; ++it) {
        int n = 5 + static_cast<int>(rng() % 4);
        Graph g = random_graph(n, 40 + static_cast<int>(rng() % 45), rng);
        if (g.edge_count() < 2) continue;
        auto mc = matroid_components(g);
        auto rc = redundantly_rigid_components(g);
        // both partition E
        size_t total_m = 0, total_r = 0;
        for (const auto& cls : mc.partition) total_m += cls.size();
        for (const auto& cls : rc.partition) total_r += cls.size();
        CHECK(total_m == static_cast<size_t>(g.edge_count()));
        CHECK(total_r == static_cast<size_t>(g.edge_count()));
        // each matroid class sits inside one rigid class
        for (const auto& cls : mc.partition) {
            int container = -1;
            for (size_t r = 0; r < rc.partition.size(); ++r) {
                std::set<Edge> inside(rc.partition[r].begin(), rc.partition[r].end());
                bool all = true;
                for (const auto& e : cls) all = all && inside.count(e);
                if (all) container = static_cast<int>(r);
            }
            CHECK(container >= 0);
        }
    }
}

TEST_CASE("rigid components found by definition on a small instance") {
    // circuit plus a pendant edge: one rigid block, one bridge class
    Graph g = k5e().add_vertex(9).add_edge(0, 9);
    auto rc = redundantly_rigid_components(g);
    REQUIRE(rc.partition.size() == 2);
    CHECK(rc.bridges == std::vector<Edge>{{0, 9}});
    // definitional check: the block is a maximal redundantly rigid edge set
    auto is_rr = [&](const std::vector<Edge>& edges) {
        std::set<VertexId> span;
        for (const auto& [u, v] : edges) {
            span.insert(u);
            span.insert(v);
        }
        Graph sub(std::vector<VertexId>(span.begin(), span.end()), edges);
        return is_redundantly_rigid(sub);
    };
    CHECK(is_rr(k5e().edges()));
    CHECK(!is_rr(g.edges()));
}

TEST_CASE("two-connected and redundantly rigid iff rm-connected on small graphs") {
    std::mt19937_64 rng(419);
    for (int it = 0; it < 120; ++it) {
        int n = 4 + static_cast<int>(rng() % 5);
        Graph raw = random_graph(n, 40 + static_cast<int>(rng() % 50), rng);
        // isolated vertices say nothing about the matroid on E
        std::vector<VertexId> keep;
        for (VertexId v : raw.vertices())
            if (raw.degree(v) > 0) keep.push_back(v);
        Graph g = induced_subgraph(raw, keep);
        if (g.edge_count() < 2) continue;
        bool lhs = is_2_connected(g) && is_redundantly_rigid(g);
        CHECK(lhs == is_rm_connected(g));
    }
}
