#ifndef M22_MATROID_HPP
#define M22_MATROID_HPP

#include <vector>

#include "m22/graph.hpp"

namespace m22 {

// Partition of E under the shared-circuit equivalence of M*(2,2), plus the
// edges lying in no circuit.
struct MatroidComponents {
    std::vector<std::vector<Edge>> partition;  // non-bridge classes then bridge singletons
    std::vector<Edge> bridges;
};

struct RigidComponents {
    std::vector<std::vector<Edge>> partition;  // maximal redundantly rigid edge sets
    std::vector<Edge> bridges;                 // edges in no circuit, own classes
};

// The unique circuit inside basis + {e}: {e} plus the basis elements whose
// swap with e stays independent. basis must be independent and basis + {e}
// dependent.
std::vector<Edge> fundamental_circuit(const Graph& g, const std::vector<Edge>& basis,
                                      Edge e);

// Components via union-find over fundamental circuits of one pebble-game
// basis. definitional = true switches to direct circuit enumeration
// (|V| <= 7) for auditing.
MatroidComponents matroid_components(const Graph& g, bool definitional = false);

// True when E has at least two edges, a single component, and no bridges.
bool is_rm_connected(const Graph& g);

// rank(G) = 2|V|-2 and rank(G - e) = 2|V|-2 for every edge.
bool is_redundantly_rigid(const Graph& g);

// Maximal unions of matroid components whose edge set induces a rigid
// graph; bridges stay singletons.
RigidComponents redundantly_rigid_components(const Graph& g);

}  // namespace m22

#endif
