#ifndef M22_MOVES_HPP
#define M22_MOVES_HPP

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "m22/graph.hpp"
#include "m22/structure.hpp"

namespace m22 {

enum class MoveKind { Henneberg2, InvHenneberg2, Sum1, Sum2, Sum3, Sep1, Sep2, Sep3 };

const char* move_kind_name(MoveKind k);
MoveKind move_kind_from_name(const std::string& name);

// Splits edge uw with a fresh vertex v_label and joins it to z.
Graph henneberg2(const Graph& g, Edge uw, VertexId z, VertexId v_label);

// Removes degree-3 vertex v and adds the edge uw between two of its
// neighbors (G_v^{uw}); uw must not already be present.
Graph inverse_henneberg2(const Graph& g, VertexId v, Edge uw);

// Multigraph version; the added edge must not create a parallel pair.
MultiGraph inverse_henneberg2(const MultiGraph& g, VertexId v, Edge uw);

// The pair (uv, wv) is admissible when G_v^{uw} is a circuit. Lenient: false
// on precondition-violating pairs (wrong degree, uw already an edge, ...).
bool is_admissible_pair(const Graph& g, VertexId v, Edge uw);
bool is_admissible_pair(const MultiGraph& g, VertexId v, Edge uw);

struct AdmissibleNode {
    VertexId v;
    std::vector<Edge> pairs;  // admissible neighbor pairs, lex order
};

// Degree-3 vertices with at least one admissible pair, ascending by id.
std::vector<AdmissibleNode> admissible_nodes(const Graph& g);
std::vector<AdmissibleNode> admissible_nodes(const MultiGraph& g);

// G1 with edge a1b1, G2 with hanging K4(a2,b2,c2,d2): removes a1b1, the K4
// interior and edge a2b2, then merges a1=a2 -> a, b1=b2 -> b. G2's surviving
// vertices are shifted above G1's labels.
Graph one_sum(const Graph& g1, Edge a1b1, const Graph& g2,
              std::array<VertexId, 4> k4_2);

// Both operands carry hanging K4s; interiors removed, cut vertices merged,
// one copy of ab kept.
Graph two_sum(const Graph& g1, std::array<VertexId, 4> k4_1, const Graph& g2,
              std::array<VertexId, 4> k4_2);

// Deletes degree-3 vertices v1, v2 and joins their neighborhoods by the
// given matching (a1a2, b1b2, c1c2).
Graph three_sum(const Graph& g1, VertexId v1, const Graph& g2, VertexId v2,
                const std::array<std::pair<VertexId, VertexId>, 3>& matching);

// Split over a cutpair with ab absent: the f=2 side receives edge ab, the
// f=3 side receives a fresh K4(a,b,c,d). Returned in that order.
std::pair<Graph, Graph> one_separation(const Graph& g, const CutPair& cp);

// Split over a cutpair with ab present and both side f-values 2: each side
// receives a fresh K4 glued over ab.
std::pair<Graph, Graph> two_separation(const Graph& g, const CutPair& cp);

// Split over a non-trivial 3-edge cutset with vertex-disjoint edges: each
// side gains a fresh degree-3 vertex joined to its cut-edge endpoints.
std::pair<Graph, Graph> three_separation(const Graph& g, const EdgeCutset3& cs);

}  // namespace m22

#endif
