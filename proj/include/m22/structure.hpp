#ifndef M22_STRUCTURE_HPP
#define M22_STRUCTURE_HPP

#include <array>
#include <vector>

#include "m22/graph.hpp"

namespace m22 {

// Two-vertex cut with its canonical bipartition: A is the component of
// G - {a,b} containing the smallest vertex id, B the rest.
struct CutPair {
    VertexId a, b;  // a < b
    std::vector<VertexId> side_a, side_b;
    bool ab_present = false;
    // all components of G - {a,b}, sorted by smallest member
    std::vector<std::vector<VertexId>> components;
};

struct EdgeCutset3 {
    std::array<Edge, 3> edges;
    std::vector<VertexId> side_a, side_b;
    bool trivial = false;  // min side has a single vertex
};

// Degree-3 vertices and their classification inside G[V3*], where V3* holds
// the nodes lying in no K4 subgraph.
struct NodeCensus {
    std::vector<VertexId> nodes;      // V3
    std::vector<VertexId> starred;    // V3*
    std::vector<VertexId> leaves;     // degree <= 1 in G[V3*]
    std::vector<VertexId> series;     // degree 2
    std::vector<VertexId> branching;  // degree 3
};

struct HangingK4 {
    CutPair pair;
    VertexId c, d;  // interior vertices, c < d
};

bool is_2_connected(const Graph& g);
bool is_2_connected(const MultiGraph& g);
bool is_3_connected(const Graph& g);
bool is_3_connected(const MultiGraph& g);

// Exhaustive deletion scan; connected g with |V| >= 4 required.
std::vector<CutPair> cutpairs(const Graph& g);

// Size of a minimum edge cut (0 when disconnected or trivial).
int edge_connectivity(const Graph& g);
int edge_connectivity(const MultiGraph& g);

// All 3-edge cuts whose sides both have at least two vertices. Requires
// 3-edge-connected input.
std::vector<EdgeCutset3> nontrivial_3_edge_cutsets(const Graph& g);
std::vector<EdgeCutset3> nontrivial_3_edge_cutsets(const MultiGraph& g);

NodeCensus node_census(const Graph& g);

// Cutpairs with a two-vertex side inducing K4 on side + {a,b}; one entry per
// such side.
std::vector<HangingK4> hanging_k4_cutpairs(const Graph& g);

// Deletes the interior pair of every hanging K4 registered on the input and
// adds a parallel copy of each cutpair edge. Requires every cutpair of g to
// carry a hanging K4 with ab in E.
MultiGraph contract_hanging_k4s(const Graph& g);

}  // namespace m22

#endif
