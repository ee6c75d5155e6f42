#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "m22/canonical.hpp"
#include "m22/pebble.hpp"
#include "test_util.hpp"

using namespace m22;
using namespace testutil;

TEST_CASE("pebble rank on the base examples") {
    CHECK(pebble_rank(complete(4)).rank == 6);
    CHECK(pebble_rank(k5e()).rank == 8);
    CHECK(pebble_rank(k4_edge_k4()).rank == 10);
    CHECK(pebble_rank(k4_vertex_k4()).rank == 12);
}

TEST_CASE("pebble parameters are validated") {
    CHECK_THROWS_AS(pebble_rank(complete(4), 2, 4), PreconditionError);
    CHECK_THROWS_AS(pebble_rank(complete(4), 0, 0), PreconditionError);
    CHECK_NOTHROW(pebble_rank(complete(4), 2, 3));
}

TEST_CASE("pebble rank agrees with the exhaustive subset oracle on random graphs") {
    std::mt19937_64 rng(101);
    for (int it = 0; it < 60; ++it) {
        int n = 3 + static_cast<int>(rng() % 4);
        Graph g = random_graph(n, 35 + static_cast<int>(rng() % 50), rng);
        if (g.edge_count() > 13) continue;  // keep the 2^m scan cheap
        CHECK(pebble_rank(g).rank == brute_max_sparse_subset(g));
    }
}

TEST_CASE("pebble rank witness is independent and spans the rank") {
    std::mt19937_64 rng(103);
    for (int it = 0; it < 40; ++it) {
        Graph g = random_graph(6, 60, rng);
        auto r = pebble_rank(g);
        CHECK(static_cast<int>(r.independent_edges.size()) == r.rank);
        CHECK(brute_sparse(Graph(g.vertices(), r.independent_edges)));
    }
}

TEST_CASE("rank is a matroid rank function: monotone, unit increase, submodular") {
    std::mt19937_64 rng(107);
    for (int it = 0; it < 30; ++it) {
        Graph g = random_graph(6, 70, rng);
        const auto& edges = g.edges();
        if (edges.size() < 3) continue;
        auto rank_of = [&](const std::vector<Edge>& sub) {
            return pebble_rank(Graph(g.vertices(), sub)).rank;
        };
        std::vector<Edge> a, b;
        for (const auto& e : edges) {
            if (rng() % 2) a.push_back(e);
            if (rng() % 2) b.push_back(e);
        }
        std::set<Edge> sa(a.begin(), a.end()), sb(b.begin(), b.end());
        std::vector<Edge> uni, inter;
        std::set_union(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(uni));
        std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(),
                              std::back_inserter(inter));
        int ra = rank_of(a), rb = rank_of(b);
        CHECK(ra <= static_cast<int>(a.size()));
        CHECK(rank_of(uni) + rank_of(inter) <= ra + rb);  // submodular
        if (!a.empty()) {
            std::vector<Edge> smaller(a.begin(), a.end() - 1);
            int rs = rank_of(smaller);
            CHECK(rs <= ra);      // monotone
            CHECK(ra <= rs + 1);  // unit increase
        }
    }
}

TEST_CASE("sparse and tight classification") {
    CHECK(is_tight(complete(4)));
    CHECK(is_sparse(complete(4)));
    Graph pendant = complete(4).add_vertex(4).add_edge(3, 4);
    CHECK(is_sparse(pendant));
    CHECK(!is_tight(pendant));
    CHECK(!is_sparse(k5e()));
    // K4 is (2,2)-sparse but not (2,3)-sparse
    CHECK(!is_sparse(complete(4), 2, 3));
}

TEST_CASE("circuit recognition on the base graphs and non-circuits") {
    CHECK(is_circuit(k5e()));
    CHECK(is_circuit(k4_edge_k4()));
    CHECK(is_circuit(k4_vertex_k4()));
    CHECK(!is_circuit(complete(4)));
    CHECK(!is_circuit(k36()));
    CHECK(brute_force_is_circuit(k5e()));
    CHECK(brute_force_is_circuit(k4_edge_k4()));
    CHECK(brute_force_is_circuit(k4_vertex_k4()));
}

TEST_CASE("trees are never circuits") {
    Graph path({0, 1, 2, 3, 4}, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    CHECK(!is_circuit(path));
    CHECK(!brute_force_is_circuit(path));
}

TEST_CASE("is_circuit agrees with the brute-force oracle on small random graphs") {
    std::mt19937_64 rng(109);
    for (int it = 0; it < 400; ++it) {
        int n = 4 + static_cast<int>(rng() % 3);
        Graph g = random_graph(n, 50 + static_cast<int>(rng() % 45), rng);
        CHECK(is_circuit(g) == brute_force_is_circuit(g));
    }
}

TEST_CASE("circuits have minimum degree 3") {
    for (const Graph& g : {k5e(), k4_edge_k4(), k4_vertex_k4()})
        for (VertexId v : g.vertices()) CHECK(g.degree(v) >= 3);
}

TEST_CASE("brute force oracle cap") {
    std::vector<Edge> es;
    for (int i = 0; i < 17; ++i) es.push_back(make_edge(i, (i + 1) % 17));
    CHECK_THROWS_AS(brute_force_is_circuit(Graph::from_edges(es)), PreconditionError);
}

TEST_CASE("multicircuit recognition") {
    MultiGraph triple({0, 1}, {{0, 1, 3}});
    CHECK(is_multicircuit(triple));
    MultiGraph dbl({0, 1}, {{0, 1, 2}});
    CHECK(!is_multicircuit(dbl));
    CHECK(is_multicircuit(MultiGraph::from_graph(k5e())));
    CHECK(!is_multicircuit(MultiGraph::from_graph(complete(4))));
}

TEST_CASE("multigraph rank never uses more than two parallel copies") {
    MultiGraph triple({0, 1}, {{0, 1, 3}});
    CHECK(pebble_rank(triple).rank == 2);
    MultiGraph triangle2({0, 1, 2}, {{0, 1, 2}, {1, 2, 2}, {0, 2, 2}});
    // 6 copies but the rank is limited by 2|V|-2 = 4
    CHECK(pebble_rank(triangle2).rank == 4);
}

TEST_CASE("blocking set is none when the edge is addable") {
    Graph g = complete(4).add_vertex(5);
    CHECK(!blocking_tight_set(g, 1, 5).has_value());
}

TEST_CASE("blocking set on a tight graph is the full vertex set") {
    // two K4s sharing vertex 0: tight, so every added edge is blocked by V
    Graph g({0, 1, 2, 3, 4, 5, 6},
            {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
             {0, 4}, {0, 5}, {0, 6}, {4, 5}, {4, 6}, {5, 6}});
    auto cs = blocking_tight_set(g, 1, 4);
    REQUIRE(cs.has_value());
    CHECK(cs->vertices == g.vertices());
    CHECK(cs->edge_count == 2 * g.vertex_count() - 2);
}

TEST_CASE("no blocking set when free pebbles remain nearby") {
    Graph h({0, 1, 2, 3, 4}, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(!blocking_tight_set(h, 2, 4).has_value());
    CHECK(!blocking_tight_set(h, 0, 4).has_value());
}

TEST_CASE("blocking set equals the union of all tight sets containing the pair") {
    std::mt19937_64 rng(113);
    int tested = 0, blocked = 0;
    for (int it = 0; it < 400 && tested < 80; ++it) {
        int n = 5 + static_cast<int>(rng() % 3);
        Graph g = random_graph(n, 40 + static_cast<int>(rng() % 30), rng);
        if (!is_sparse(g)) continue;
        const auto& vs = g.vertices();
        VertexId u = vs[rng() % vs.size()], w = vs[rng() % vs.size()];
        if (u == w || g.has_edge(u, w)) continue;
        ++tested;
        auto cs = blocking_tight_set(g, u, w);
        auto tights = brute_critical_sets(g, {u, w}, {}, /*proper_only=*/false);
        if (!cs.has_value()) {
            CHECK(tights.empty());
            continue;
        }
        ++blocked;
        REQUIRE(!tights.empty());
        std::set<VertexId> uni;
        for (const auto& t : tights) uni.insert(t.begin(), t.end());
        CHECK(cs->vertices == std::vector<VertexId>(uni.begin(), uni.end()));
        CHECK(cs->edge_count == 2 * static_cast<int>(cs->vertices.size()) - 2);
    }
    CHECK(tested >= 40);
    CHECK(blocked >= 5);
}

TEST_CASE("blocking set rejects non-sparse input and present edges") {
    CHECK_THROWS_AS(blocking_tight_set(k5e(), 3, 4), PreconditionError);
    CHECK_THROWS_AS(blocking_tight_set(complete(4), 0, 1), PreconditionError);
}

TEST_CASE("circuits satisfy the count and rank relations") {
    for (const Graph& g : {k5e(), k4_edge_k4(), k4_vertex_k4()}) {
        CHECK(f_value(g) == 1);
        CHECK(g.edge_count() == 2 * g.vertex_count() - 1);
        CHECK(pebble_rank(g).rank == g.edge_count() - 1);
    }
}
