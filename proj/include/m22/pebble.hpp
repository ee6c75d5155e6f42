#ifndef M22_PEBBLE_HPP
#define M22_PEBBLE_HPP

#include <optional>
#include <vector>

#include "m22/graph.hpp"

namespace m22 {

// Incremental (k,l) pebble game over a fixed vertex set, l < 2k. Each vertex
// starts with k pebbles; an edge is accepted when l+1 pebbles can be gathered
// on its endpoints, consuming one and orienting the edge. The accepted set is
// always a maximum (k,l)-sparse sub-multiset of the inserted edges.
class PebbleGame {
public:
    PebbleGame(const std::vector<VertexId>& vertices, int k, int l);

    // Returns true and records the edge if it keeps the accepted set sparse.
    bool try_insert(VertexId u, VertexId v);

    int accepted_count() const { return accepted_; }
    int pebbles_on(VertexId v) const;

    // Raises the pebble count on {u,v} as far as possible; returns the total.
    int maximize_pebbles(VertexId u, VertexId v);

    // After maximize_pebbles stalled below l+1: the unique maximal tight set
    // containing u and v (vertices that cannot reach any pebble held outside
    // {u,v}).
    std::vector<VertexId> blocked_region(VertexId u, VertexId v) const;

private:
    int index(VertexId v) const;
    bool pull_pebble_to(int root, int other);

    int k_, l_;
    std::vector<VertexId> verts_;
    std::vector<int> pebbles_;
    std::vector<std::vector<int>> out_;
    int accepted_ = 0;
};

struct RankResult {
    int rank = 0;
    std::vector<Edge> independent_edges;  // repeats possible for multigraphs
};

// Rank of the edge (multi)set in M*(k,l) / M(k,l); edges are inserted in
// sorted order so the independent witness is deterministic.
RankResult pebble_rank(const Graph& g, int k = 2, int l = 2);
RankResult pebble_rank(const MultiGraph& g, int k = 2, int l = 2);

bool is_sparse(const Graph& g, int k = 2, int l = 2);
bool is_sparse(const MultiGraph& g, int k = 2, int l = 2);
bool is_tight(const Graph& g, int k = 2, int l = 2);
bool is_tight(const MultiGraph& g, int k = 2, int l = 2);

// Simple-graph circuit in M*(2,2): |E| = 2|V|-1 and every proper subgraph is
// (2,2)-sparse.
bool is_circuit(const Graph& g);

// Multigraph analogue in M(2,2).
bool is_multicircuit(const MultiGraph& g);

// Definitional oracle: checks |E| = 2|V|-1 and i(X) <= 2|X|-2 for every
// proper vertex subset by direct enumeration. |V| <= 16.
bool brute_force_is_circuit(const Graph& g);

struct CriticalSet {
    std::vector<VertexId> vertices;
    int edge_count = 0;  // i(X) = 2|X|-2 when emitted by blocking_tight_set
};

// For (2,2)-sparse g with uw not an edge: none when uw can be added keeping
// sparsity, otherwise the maximal tight set containing u and w (it may be all
// of V(g) when g itself is tight).
std::optional<CriticalSet> blocking_tight_set(const Graph& g, VertexId u, VertexId w);

}  // namespace m22

#endif
